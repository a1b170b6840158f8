use proptest::collection::vec;
use proptest::prelude::*;

use pact_core::diagram::{
    build_functor_f, compare_routes, f_coequalizes_iff_datum, h_inverse, h_map, shift_cocone,
};
use pact_core::finset::{
    colimit_of_diagram, compose, is_cocone, pullback, quotient_by_pairs, FinMap,
};
use pact_core::fintop::{
    all_topologies, build_top_reflection, is_continuous, pullback_top, quotient_top, ContinuousMap,
    FinTopSpace, TopDatum,
};
use pact_core::globalize::{build_globalization, decide_globalizable};
use pact_core::monoid::{transformation_closure, validate_monoid, FiniteMonoid};
use pact_core::paction::{check_partial, restrict, GlobalAction, PartialActionDatum};
use pact_core::testkit::{
    gen_global_action, gen_partial_maybe_nonstrong, gen_strong_partial, naive_classes,
    naive_is_strong, sample_datum, sample_global_action, sample_monoid, GenConfig, TestRng,
};

fn cfg(seed: u64) -> GenConfig {
    GenConfig {
        seed,
        ..GenConfig::default()
    }
}

/// Any datum (axioms not required) over a sampled monoid.
fn any_datum(seed: u64) -> PartialActionDatum {
    let mut rng = TestRng::new(seed);
    let monoid = sample_monoid(&mut rng, 4).monoid;
    let carrier = rng.below(4);
    sample_datum(&mut rng, &monoid, carrier)
}

fn fin_map(max_src: usize, max_dst: usize) -> impl Strategy<Value = FinMap> {
    (1..=max_dst, 0..=max_src).prop_flat_map(|(dst, src)| {
        vec(0..dst, src).prop_map(move |images| FinMap::new(images, dst).unwrap())
    })
}

fn topology(n: usize) -> impl Strategy<Value = FinTopSpace> {
    let all = all_topologies(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// Partition of `0..n` generated by `pairs`, by repeated relabelling.
fn naive_partition(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let low = label[a].min(label[b]);
            for i in 0..n {
                if (label[i] == label[a] || label[i] == label[b]) && label[i] != low {
                    label[i] = low;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = label.clone();
    roots.sort_unstable();
    roots.dedup();
    label
        .iter()
        .map(|l| roots.binary_search(l).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn closures_satisfy_monoid_laws(
        k in 1usize..4,
        raw in vec(vec(0usize..3, 3), 1..3),
    ) {
        let gens: Vec<Vec<usize>> = raw.iter().map(|g| g[..k].iter().map(|&v| v % k).collect()).collect();
        let (monoid, elements) = transformation_closure(k, &gens, 64).unwrap();
        prop_assert!(validate_monoid(&monoid.rows(), monoid.identity()).is_ok());
        for a in monoid.elements() {
            for b in monoid.elements() {
                let ab: Vec<usize> = elements[b].iter().map(|&x| elements[a][x]).collect();
                prop_assert_eq!(&elements[monoid.mul(a, b)], &ab);
            }
        }
    }

    #[test]
    fn composition_is_associative(
        f in fin_map(3, 3), g_images in vec(0usize..3, 3), h_images in vec(0usize..3, 3),
    ) {
        let g = FinMap::new(g_images[..f.dst_size()].to_vec(), 3).unwrap();
        let h = FinMap::new(h_images, 3).unwrap();
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn quotient_matches_naive_partition(
        n in 1usize..7,
        raw in vec((0usize..7, 0usize..7), 0..8),
    ) {
        let pairs: Vec<(usize, usize)> = raw.iter().map(|&(a, b)| (a % n, b % n)).collect();
        let (size, projection) = quotient_by_pairs(n, pairs.iter().copied());
        let expected = naive_partition(n, &pairs);
        prop_assert_eq!(projection.images(), expected.as_slice());
        prop_assert_eq!(size, expected.iter().max().map_or(0, |m| m + 1));
    }

    #[test]
    fn pullback_is_the_agreeing_pairs(f in fin_map(4, 3), g_images in vec(0usize..3, 0..4)) {
        let g = FinMap::new(
            g_images.iter().map(|&v| v % f.dst_size()).collect(),
            f.dst_size(),
        ).unwrap();
        let pb = pullback(&f, &g).unwrap();
        let mut expected = Vec::new();
        for x in 0..f.src_size() {
            for y in 0..g.src_size() {
                if f.apply(x) == g.apply(y) {
                    expected.push((x, y));
                }
            }
        }
        prop_assert_eq!(&pb.pairs, &expected);
        prop_assert_eq!(compose(&pb.p1, &f).unwrap(), compose(&pb.p2, &g).unwrap());
    }

    #[test]
    fn strongness_matches_definition(seed in any::<u64>()) {
        let d = any_datum(seed);
        let report = check_partial(&d);
        prop_assert_eq!(report.is_strong, naive_is_strong(&d));
    }

    #[test]
    fn quotient_classes_match_naive_oracle(seed in any::<u64>()) {
        let d = any_datum(seed);
        prop_assert_eq!(build_globalization(&d).classes(), naive_classes(&d));
    }

    #[test]
    fn strong_iff_globalizable(seed in any::<u64>(), index in 0u64..1000) {
        let d = gen_partial_maybe_nonstrong(&cfg(seed), index).unwrap();
        prop_assert_eq!(check_partial(&d).is_strong, decide_globalizable(&d).unwrap());
    }

    #[test]
    fn restrictions_round_trip(seed in any::<u64>(), index in 0u64..1000) {
        let d = gen_strong_partial(&cfg(seed), index);
        prop_assert!(check_partial(&d).is_strong);
        let g = build_globalization(&d);
        prop_assert!(g.embed_injective());
        prop_assert_eq!(restrict(g.action(), g.embed()).unwrap(), d);
    }

    #[test]
    fn generated_actions_are_actions(seed in any::<u64>(), index in 0u64..1000) {
        let g = gen_global_action(&cfg(seed), index);
        let rebuilt = GlobalAction::new(g.monoid().clone(), g.carrier_size(), g.maps().to_vec());
        prop_assert!(rebuilt.is_ok());
    }

    #[test]
    fn routes_agree(seed in any::<u64>()) {
        let d = any_datum(seed);
        prop_assert!(compare_routes(&d).unwrap().all_equal());
    }

    #[test]
    fn shifted_cocones_stay_cocones(seed in any::<u64>()) {
        let d = any_datum(seed);
        let diagram = build_functor_f(&d);
        let colim = colimit_of_diagram(&diagram);
        for m in d.monoid().elements() {
            let legs = shift_cocone(&d, &colim.injections, m);
            prop_assert!(is_cocone(&diagram, colim.size, &legs));
        }
    }

    #[test]
    fn h_round_trips(seed in any::<u64>(), raw in vec(0usize..8, 4)) {
        let mut rng = TestRng::new(seed);
        let sampled = sample_monoid(&mut rng, 4);
        let carrier = rng.below(4);
        let d = sample_datum(&mut rng, &sampled.monoid, carrier);
        let target = sample_global_action(&mut rng, &sampled, 3);
        let z = target.carrier_size();
        prop_assume!(z > 0 || carrier == 0);
        let f = FinMap::new(raw[..carrier].iter().map(|v| v % z.max(1)).collect(), z).unwrap();
        let h = h_map(&d, &target, &f).unwrap();
        prop_assert_eq!(h_inverse(&d, &h).unwrap(), f.clone());
        let (datum, coequalizes) = f_coequalizes_iff_datum(&d, &target, &f).unwrap();
        prop_assert_eq!(datum, coequalizes);
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>()) {
        let d = any_datum(seed);
        let monoid = d.monoid().clone();
        let parsed_monoid = FiniteMonoid::parse(&monoid.to_string()).unwrap();
        prop_assert_eq!(&parsed_monoid, &monoid);
        let text = d.to_text("m.monoid");
        let parsed = PartialActionDatum::parse(&text, |_| Ok(monoid.clone())).unwrap();
        prop_assert_eq!(&parsed, &d);
        let g = build_globalization(&d);
        let text = g.action().to_text("m.monoid");
        let parsed = GlobalAction::parse(&text, |_| Ok(monoid.clone())).unwrap();
        prop_assert_eq!(&parsed, g.action());
    }

    #[test]
    fn topology_text_round_trips(space in (0usize..4).prop_flat_map(topology)) {
        prop_assert_eq!(FinTopSpace::parse(&space.to_string()).unwrap(), space);
    }

    #[test]
    fn quotient_topology_is_final(
        space in topology(3),
        raw in vec(0usize..3, 3),
    ) {
        let size = raw.iter().copied().max().unwrap() + 1;
        let c = FinMap::new(raw, size).unwrap();
        prop_assume!(c.is_surjective());
        let q = quotient_top(&space, &c).unwrap();
        prop_assert!(is_continuous(&c, &space, &q).unwrap());
        // finest such topology: every V with open preimage is open
        for mask in 0u32..(1 << size) {
            let v = pact_core::finset::Subset::from_predicate(size, |y| mask & (1 << y) != 0);
            let pre = pact_core::finset::Subset::from_predicate(3, |x| v.contains(c.apply(x)));
            prop_assert_eq!(q.is_open(&v), space.is_open(&pre));
        }
    }

    #[test]
    fn top_pullback_projections_are_continuous(
        x in topology(3), y in topology(2), z in topology(2),
        fi in vec(0usize..2, 3), gi in vec(0usize..2, 2),
    ) {
        let f = FinMap::new(fi, 2).unwrap();
        let g = FinMap::new(gi, 2).unwrap();
        prop_assume!(is_continuous(&f, &x, &z).unwrap() && is_continuous(&g, &y, &z).unwrap());
        let fc = ContinuousMap::new(f.clone(), x.clone(), z.clone()).unwrap();
        let gc = ContinuousMap::new(g.clone(), y.clone(), z).unwrap();
        let pb = pullback_top(&fc, &gc).unwrap();
        prop_assert_eq!(&pb.set, &pullback(&f, &g).unwrap());
        prop_assert!(is_continuous(&pb.set.p1, &pb.space, &x).unwrap());
        prop_assert!(is_continuous(&pb.set.p2, &pb.space, &y).unwrap());
    }

    #[test]
    fn top_reflection_lies_over_the_set_reflection(
        seed in any::<u64>(),
        index in 0u64..1000,
        pick in any::<prop::sample::Index>(),
    ) {
        let d = gen_partial_maybe_nonstrong(&cfg(seed), index).unwrap();
        let spaces = all_topologies(d.carrier_size()).unwrap();
        let tau = spaces[pick.index(spaces.len())].clone();
        // discrete domains make every structure map continuous, except that
        // dom α_e must carry τ itself
        let e = d.monoid().identity();
        let domains = d
            .monoid()
            .elements()
            .map(|m| {
                if m == e {
                    tau.clone()
                } else {
                    FinTopSpace::discrete(d.domain(m).len()).unwrap()
                }
            })
            .collect();
        let td = TopDatum::new(d.clone(), tau.clone(), domains).unwrap();
        let r = build_top_reflection(&td).unwrap();
        let g = build_globalization(&d);
        prop_assert_eq!(&r.action, g.action());
        prop_assert_eq!(&r.embed, g.embed());
        prop_assert!(is_continuous(&r.embed, &tau, &r.space).unwrap());
    }
}
