//! The quotient globalization `Y = (M × X)/≈`, the pullback criterion for
//! being a globalization, and brute-force verification of the reflection
//! property.
//!
//! `≈` is the equivalence on `M × X` generated by
//! `(n·m', x) ~ (n, α_{m'}(x))` for `x ∈ dom α_{m'}`. The shift
//! `β_n([m, x]) = [nm, x]` is a global action on `Y` and `ι(x) = [e, x]` is a
//! reflection of the datum into global actions. The datum has a globalization
//! exactly when, for every `m`, the square `(ι_m, α_m; β_m ∘ ι, ι)` is a
//! pullback.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::finset::{all_maps, compose, count_maps, pullback, quotient_by_pairs, FinMap};
use crate::paction::{check_partial, is_datum_morphism_to_global, is_equivariant};
use crate::paction::{GlobalAction, PartialActionDatum};
use crate::text;

/// Default bound on `|Z|^|Y|` (and `|Z|^|X|`) for reflection enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Globalization {
    source: PartialActionDatum,
    quotient_size: usize,
    /// The projection `M × X → Y`, indexed by `m·|X| + x`.
    class_of: FinMap,
    action: GlobalAction,
    embed: FinMap,
    embed_injective: bool,
}

impl Globalization {
    pub fn source(&self) -> &PartialActionDatum {
        &self.source
    }

    pub fn quotient_size(&self) -> usize {
        self.quotient_size
    }

    /// The projection `c : M × X → Y` on flattened pairs.
    pub fn projection(&self) -> &FinMap {
        &self.class_of
    }

    /// `[m, x]`.
    pub fn class_of(&self, m: usize, x: usize) -> usize {
        self.class_of.apply(m * self.source.carrier_size() + x)
    }

    /// Members of each class as `(m, x)` pairs, ascending.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.source.carrier_size();
        let mut classes = vec![Vec::new(); self.quotient_size];
        for (i, &c) in self.class_of.images().iter().enumerate() {
            classes[c].push((i / n, i % n));
        }
        classes
    }

    pub fn action(&self) -> &GlobalAction {
        &self.action
    }

    /// `ι : X → Y`.
    pub fn embed(&self) -> &FinMap {
        &self.embed
    }

    /// Whether `ι` turned out injective.
    pub fn embed_injective(&self) -> bool {
        self.embed_injective
    }

    /// Text dump: class listing, the β table, and the ι images.
    pub fn dump(&self) -> String {
        let mut out = format!("classes {}\n", self.quotient_size);
        for (c, members) in self.classes().iter().enumerate() {
            let pairs: Vec<String> = members.iter().map(|(m, x)| format!("({m},{x})")).collect();
            out.push_str(&text::labelled_line(c, &pairs.join(" ")));
        }
        let _ = writeln!(out, "beta {}", self.quotient_size);
        out.push_str(&self.action.table_lines());
        let _ = writeln!(
            out,
            "{}",
            format!("iota {}", text::join(self.embed.images())).trim_end()
        );
        out
    }
}

/// Builds `(Y, β, ι)` for an arbitrary datum; the axioms are not required.
pub fn build_globalization(d: &PartialActionDatum) -> Globalization {
    let monoid = d.monoid();
    let n_points = d.carrier_size();
    let flat = |m: usize, x: usize| m * n_points + x;
    let pairs = monoid.elements().flat_map(|n| {
        monoid.elements().flat_map(move |m_prime| {
            d.part(m_prime)
                .graph()
                .into_iter()
                .map(move |(x, y)| (flat(monoid.mul(n, m_prime), x), flat(n, y)))
        })
    });
    let (quotient_size, class_of) = quotient_by_pairs(monoid.size() * n_points, pairs);

    // least representative of each class
    let mut representative = vec![usize::MAX; quotient_size];
    for (i, &c) in class_of.images().iter().enumerate().rev() {
        representative[c] = i;
    }
    let maps = monoid
        .elements()
        .map(|n| {
            let images = representative
                .iter()
                .map(|&i| class_of.apply(flat(monoid.mul(n, i / n_points), i % n_points)))
                .collect();
            FinMap::new(images, quotient_size).expect("classes in range")
        })
        .collect();
    let action = GlobalAction::new(monoid.clone(), quotient_size, maps)
        .expect("the shift on (M × X)/≈ is a global action");
    let e = monoid.identity();
    let embed = FinMap::new(
        (0..n_points).map(|x| class_of.apply(flat(e, x))).collect(),
        quotient_size,
    )
    .expect("classes in range");
    Globalization {
        source: d.clone(),
        quotient_size,
        embed_injective: embed.is_mono(),
        class_of,
        action,
        embed,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizationVerdict {
    pub is_globalization: bool,
    pub iota_injective: bool,
    /// First `m` whose square is not a pullback.
    pub failing_m: Option<usize>,
    /// Symmetric difference between the pullback `{(x, y) : β_m(ι(x)) = ι(y)}`
    /// and the graph of `α_m`, for `failing_m`.
    pub pullback_mismatch: Option<Vec<(usize, usize)>>,
}

/// Decides whether `(g, iota)` is a globalization of `d` by comparing, for
/// every `m`, the pullback of `β_m ∘ ι` and `ι` with the graph of `α_m`.
pub fn verify_globalization(
    d: &PartialActionDatum,
    g: &GlobalAction,
    iota: &FinMap,
) -> Result<GlobalizationVerdict> {
    if d.monoid() != g.monoid() {
        return Err(Error::MonoidMismatch);
    }
    if iota.src_size() != d.carrier_size() || iota.dst_size() != g.carrier_size() {
        return Err(Error::SizeMismatch {
            what: "embedding vs carriers",
            expected: d.carrier_size(),
            found: iota.src_size(),
        });
    }
    let iota_injective = iota.is_mono();
    for m in d.monoid().elements() {
        let pb = pullback(&compose(iota, g.map(m))?, iota)?;
        let graph = d.part(m).graph();
        if pb.pairs != graph {
            let mut mismatch: Vec<(usize, usize)> = pb
                .pairs
                .iter()
                .filter(|p| !graph.contains(p))
                .chain(graph.iter().filter(|p| !pb.pairs.contains(p)))
                .copied()
                .collect();
            mismatch.sort_unstable();
            return Ok(GlobalizationVerdict {
                is_globalization: false,
                iota_injective,
                failing_m: Some(m),
                pullback_mismatch: Some(mismatch),
            });
        }
    }
    // a function graph as the pullback at e forces ι mono
    debug_assert!(iota_injective);
    Ok(GlobalizationVerdict {
        is_globalization: true,
        iota_injective,
        failing_m: None,
        pullback_mismatch: None,
    })
}

/// Whether a partial action has a (universal) globalization, decided on the
/// built reflection.
pub fn decide_globalizable(d: &PartialActionDatum) -> Result<bool> {
    if !check_partial(d).is_partial {
        return Err(Error::NotPartial);
    }
    let glob = build_globalization(d);
    Ok(verify_globalization(d, glob.action(), glob.embed())?.is_globalization)
}

/// Checks that `g` is a reflection of `d` against `target`: every datum
/// morphism `f : d → target` factors as `f' ∘ ι` for exactly one datum
/// morphism `f' : β → target`.
pub fn verify_reflection_against(
    d: &PartialActionDatum,
    g: &Globalization,
    target: &GlobalAction,
) -> Result<bool> {
    verify_reflection(d, g.action(), g.embed(), target, DEFAULT_ENUMERATION_CAP)
}

/// Reflection check for an arbitrary candidate `(β, ι)`.
pub fn verify_reflection(
    d: &PartialActionDatum,
    action: &GlobalAction,
    embed: &FinMap,
    target: &GlobalAction,
    cap: u128,
) -> Result<bool> {
    if d.monoid() != action.monoid() || d.monoid() != target.monoid() {
        return Err(Error::MonoidMismatch);
    }
    let (x_size, y_size, z_size) = (
        d.carrier_size(),
        action.carrier_size(),
        target.carrier_size(),
    );
    for count in [count_maps(x_size, z_size), count_maps(y_size, z_size)] {
        if count > cap {
            return Err(Error::EnumerationTooLarge { count, cap });
        }
    }
    if !is_datum_morphism_to_global(embed, d, action)? {
        return Ok(false);
    }
    let equivariant: Vec<FinMap> = all_maps(y_size, z_size)
        .filter(|f| is_equivariant(f, action, target))
        .collect();
    for f in all_maps(x_size, z_size) {
        let factorizations = equivariant
            .iter()
            .filter(|fp| compose(embed, fp).expect("sizes") == f)
            .count();
        let expected = usize::from(is_datum_morphism_to_global(&f, d, target)?);
        if factorizations != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{cyclic_group, FiniteMonoid};
    use crate::paction::{check_strong, restrict};

    fn example(image: usize) -> PartialActionDatum {
        PartialActionDatum::from_lookup(
            FiniteMonoid::idempotent_pair(),
            2,
            &[vec![Some(0), Some(1)], vec![Some(image), None]],
        )
        .unwrap()
    }

    #[test]
    fn trivial_monoid_globalizes_to_itself() {
        let d = GlobalAction::trivial(FiniteMonoid::trivial(), 3).to_datum();
        let g = build_globalization(&d);
        assert_eq!(g.quotient_size(), 3);
        assert_eq!(g.embed(), &FinMap::identity(3));
        assert!(g.embed_injective());
    }

    #[test]
    fn strong_example_has_three_classes() {
        let g = build_globalization(&example(0));
        assert_eq!(
            g.classes(),
            vec![vec![(0, 0), (1, 0)], vec![(0, 1)], vec![(1, 1)]]
        );
        assert_eq!(g.action().map(1).images(), &[0, 2, 2]);
        assert_eq!(g.embed().images(), &[0, 1]);
        assert!(g.embed_injective());
    }

    #[test]
    fn non_strong_example_has_two_classes() {
        let g = build_globalization(&example(1));
        assert_eq!(
            g.classes(),
            vec![vec![(0, 0)], vec![(0, 1), (1, 0), (1, 1)]]
        );
        assert!(g.embed_injective());
    }

    #[test]
    fn verdicts_on_examples() {
        let d = example(1);
        let g = build_globalization(&d);
        let v = verify_globalization(&d, g.action(), g.embed()).unwrap();
        assert!(!v.is_globalization);
        assert_eq!(v.failing_m, Some(1));
        assert_eq!(v.pullback_mismatch, Some(vec![(1, 1)]));
        assert!(!decide_globalizable(&d).unwrap());

        let d = example(0);
        let g = build_globalization(&d);
        let v = verify_globalization(&d, g.action(), g.embed()).unwrap();
        assert!(v.is_globalization);
        assert!(decide_globalizable(&d).unwrap());
    }

    #[test]
    fn restriction_round_trip_is_a_globalization() {
        let z2 = cyclic_group(2);
        let swap = FinMap::new(vec![1, 0, 2], 3).unwrap();
        let g = GlobalAction::new(z2, 3, vec![FinMap::identity(3), swap]).unwrap();
        let iota = FinMap::new(vec![2, 0], 3).unwrap();
        let d = restrict(&g, &iota).unwrap();
        assert!(
            verify_globalization(&d, &g, &iota)
                .unwrap()
                .is_globalization
        );
    }

    #[test]
    fn non_mono_embedding_fails_at_identity() {
        let d = GlobalAction::trivial(FiniteMonoid::idempotent_pair(), 2).to_datum();
        let g = GlobalAction::trivial(FiniteMonoid::idempotent_pair(), 1);
        let v = verify_globalization(&d, &g, &FinMap::new(vec![0, 0], 1).unwrap()).unwrap();
        assert!(!v.is_globalization);
        assert!(!v.iota_injective);
        assert_eq!(v.failing_m, Some(0));
    }

    #[test]
    fn decide_requires_partial_action() {
        let d = PartialActionDatum::from_lookup(
            FiniteMonoid::idempotent_pair(),
            1,
            &[vec![None], vec![None]],
        )
        .unwrap();
        assert_eq!(decide_globalizable(&d), Err(Error::NotPartial));
        // the construction itself accepts any datum
        assert_eq!(build_globalization(&d).quotient_size(), 2);
    }

    #[test]
    fn global_data_are_globalizable() {
        let swap = FinMap::new(vec![1, 0], 2).unwrap();
        let g = GlobalAction::new(cyclic_group(2), 2, vec![FinMap::identity(2), swap]).unwrap();
        assert!(decide_globalizable(&g.to_datum()).unwrap());
        assert!(check_strong(&g.to_datum()).unwrap().is_strong);
    }

    #[test]
    fn reflection_against_itself_and_a_point() {
        let d = example(0);
        let g = build_globalization(&d);
        assert!(verify_reflection_against(&d, &g, g.action()).unwrap());
        let point = GlobalAction::trivial(FiniteMonoid::idempotent_pair(), 1);
        assert!(verify_reflection_against(&d, &g, &point).unwrap());
    }

    #[test]
    fn identity_is_the_unique_factorization_of_iota() {
        let d = example(0);
        let g = build_globalization(&d);
        let factorizations: Vec<FinMap> = all_maps(3, 3)
            .filter(|f| is_equivariant(f, g.action(), g.action()))
            .filter(|f| &compose(g.embed(), f).unwrap() == g.embed())
            .collect();
        assert_eq!(factorizations, vec![FinMap::identity(3)]);
    }

    #[test]
    fn a_wrong_candidate_is_not_a_reflection() {
        // ι(1) = [e,1] is not fixed by β_a, so ι cannot factor through the
        // trivial action on X
        let d = example(0);
        let candidate = GlobalAction::trivial(FiniteMonoid::idempotent_pair(), 2);
        let g = build_globalization(&d);
        assert!(!verify_reflection(
            &d,
            &candidate,
            &FinMap::identity(2),
            g.action(),
            DEFAULT_ENUMERATION_CAP
        )
        .unwrap());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let d = example(0);
        let g = build_globalization(&d);
        let err = verify_reflection(&d, g.action(), g.embed(), g.action(), 10).unwrap_err();
        assert!(matches!(
            err,
            Error::EnumerationTooLarge { count: 27, cap: 10 }
        ));
    }

    #[test]
    fn dump_format() {
        let g = build_globalization(&example(0));
        assert_eq!(
            g.dump(),
            "classes 3\n0: (0,0) (1,0)\n1: (0,1)\n2: (1,1)\nbeta 3\n0: 0 1 2\n1: 0 2 2\niota 0 1\n"
        );
    }
}
