//! Seeded generators and exhaustive oracles for small instances.
//!
//! Randomness comes from SplitMix64 (state += 0x9E3779B97F4A7C15, then the
//! xor-shift-multiply finalizer with 0xBF58476D1CE4E5B9 and
//! 0x94D049BB133111EB). Sample `i` of a run with seed `s` draws from a fresh
//! stream seeded with the first output of SplitMix64 seeded at
//! `s ^ (i · 0xD1B54A32D192ED03)`. A value below `n` is taken as the high word
//! of `next · n` (128-bit product). Every generator is a pure function of
//! `(config, index)`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::finset::{all_maps, compose, count_maps, pullback, FinMap};
use crate::fintop::{is_continuous, pullback_top, ContinuousMap, FinTopSpace};
use crate::monoid::{transformation_closure, FiniteMonoid};
use crate::paction::{check_partial, restrict, GlobalAction, PartialActionDatum};

const STREAM_MIX: u64 = 0xD1B54A32D192ED03;

/// A SplitMix64 stream with the range conventions above.
#[derive(Debug, Clone)]
pub struct TestRng(SplitMix64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    /// The independent stream for sample `index` of a run.
    pub fn for_sample(seed: u64, index: u64) -> Self {
        let derived = SplitMix64::seed_from_u64(seed ^ index.wrapping_mul(STREAM_MIX)).next_u64();
        Self::new(derived)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((u128::from(self.next_u64()) * n as u128) >> 64) as usize
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, self.below(i + 1));
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_monoid: usize,
    pub max_carrier: usize,
    pub samples: usize,
    /// Rejection-sampling budget per sample.
    pub max_attempts: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_monoid: 3,
            max_carrier: 3,
            samples: 100,
            max_attempts: 10_000,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_monoid == 0 {
            return Err(Error::InvalidConfig("max_monoid must be positive"));
        }
        if self.max_carrier == 0 {
            return Err(Error::InvalidConfig("max_carrier must be positive"));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidConfig("max_attempts must be positive"));
        }
        Ok(())
    }

    fn rng(&self, index: u64) -> TestRng {
        TestRng::for_sample(self.seed, index)
    }
}

/// A monoid, and when it was built as a transformation closure, the
/// transformation each element stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledMonoid {
    pub monoid: FiniteMonoid,
    pub transformations: Option<Vec<Vec<usize>>>,
}

/// Half the time a fixture, otherwise the closure of one or two random
/// transformations of at most three points; at most `max_size` elements.
pub fn sample_monoid(rng: &mut TestRng, max_size: usize) -> SampledMonoid {
    if rng.chance(1, 2) {
        for _ in 0..8 {
            let k = 1 + rng.below(3);
            let gens: Vec<Vec<usize>> = (0..1 + rng.below(2))
                .map(|_| (0..k).map(|_| rng.below(k)).collect())
                .collect();
            if let Ok((monoid, transformations)) = transformation_closure(k, &gens, max_size) {
                return SampledMonoid {
                    monoid,
                    transformations: Some(transformations),
                };
            }
        }
    }
    let pool: Vec<FiniteMonoid> = FiniteMonoid::fixture_pool()
        .into_iter()
        .filter(|m| m.size() <= max_size)
        .collect();
    SampledMonoid {
        monoid: pool[rng.below(pool.len())].clone(),
        transformations: None,
    }
}

/// A random action of `sampled.monoid` on at most `max_carrier` points: a
/// disjoint union of fixed points, left-regular blocks, left orbits `M·s`
/// and (for transformation monoids) the natural action, randomly relabelled.
pub fn sample_global_action(
    rng: &mut TestRng,
    sampled: &SampledMonoid,
    max_carrier: usize,
) -> GlobalAction {
    let monoid = &sampled.monoid;
    let k = monoid.size();
    // each block: points and the action of every m as local indices
    let mut blocks: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut used = 0;
    while used < max_carrier {
        let room = max_carrier - used;
        let block: Vec<Vec<usize>> = match rng.below(4) {
            1 if k <= room => monoid
                .elements()
                .map(|m| monoid.elements().map(|s| monoid.mul(m, s)).collect())
                .collect(),
            2 => {
                let s = rng.below(k);
                let mut orbit: Vec<usize> = monoid.elements().map(|m| monoid.mul(m, s)).collect();
                orbit.sort_unstable();
                orbit.dedup();
                if orbit.len() > room {
                    continue;
                }
                let local = |t: usize| orbit.binary_search(&t).expect("orbit is closed");
                monoid
                    .elements()
                    .map(|m| orbit.iter().map(|&t| local(monoid.mul(m, t))).collect())
                    .collect()
            }
            3 => match &sampled.transformations {
                Some(ts) if ts[0].len() <= room && !ts[0].is_empty() => ts.clone(),
                _ => continue,
            },
            _ => vec![vec![0]; k],
        };
        used += block[0].len();
        blocks.push(block);
        if rng.chance(1, 3) {
            break;
        }
    }
    let relabel = rng.permutation(used);
    let mut maps = vec![vec![0; used]; k];
    let mut offset = 0;
    for block in &blocks {
        for (m, local_map) in block.iter().enumerate() {
            for (i, &j) in local_map.iter().enumerate() {
                maps[m][relabel[offset + i]] = relabel[offset + j];
            }
        }
        offset += block[0].len();
    }
    let maps = maps
        .into_iter()
        .map(|images| FinMap::new(images, used).expect("in range"))
        .collect();
    GlobalAction::new(monoid.clone(), used, maps)
        .expect("blocks are homomorphisms into the transformation monoid")
}

/// A random injection `0..x_size → 0..y_size`.
pub fn sample_mono(rng: &mut TestRng, x_size: usize, y_size: usize) -> FinMap {
    debug_assert!(x_size <= y_size);
    let perm = rng.permutation(y_size);
    FinMap::new(perm[..x_size].to_vec(), y_size).expect("in range")
}

pub fn gen_global_action(cfg: &GenConfig, index: u64) -> GlobalAction {
    let mut rng = cfg.rng(index);
    let sampled = sample_monoid(&mut rng, cfg.max_monoid);
    sample_global_action(&mut rng, &sampled, cfg.max_carrier)
}

/// A global action with a random mono into its carrier.
pub fn gen_restriction_input(cfg: &GenConfig, index: u64) -> (GlobalAction, FinMap) {
    let mut rng = cfg.rng(index);
    let sampled = sample_monoid(&mut rng, cfg.max_monoid);
    let g = sample_global_action(&mut rng, &sampled, cfg.max_carrier);
    let x_size = rng.below(g.carrier_size() + 1);
    let iota = sample_mono(&mut rng, x_size, g.carrier_size());
    (g, iota)
}

/// The restriction of a random global action along a random mono.
pub fn gen_strong_partial(cfg: &GenConfig, index: u64) -> PartialActionDatum {
    let (g, iota) = gen_restriction_input(cfg, index);
    restrict(&g, &iota).expect("iota is a mono into the carrier")
}

/// A uniformly random datum with `α_e = id` and each other point in each
/// domain with probability 1/2.
pub fn sample_datum(
    rng: &mut TestRng,
    monoid: &FiniteMonoid,
    carrier: usize,
) -> PartialActionDatum {
    let tables: Vec<Vec<Option<usize>>> = monoid
        .elements()
        .map(|m| {
            (0..carrier)
                .map(|x| {
                    if m == monoid.identity() {
                        Some(x)
                    } else if rng.chance(1, 2) {
                        Some(rng.below(carrier))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    PartialActionDatum::from_lookup(monoid.clone(), carrier, &tables).expect("in range")
}

/// Rejection-samples a partial action (not necessarily strong) over
/// monoids drawn by `pick_monoid`.
fn rejection_sample(
    cfg: &GenConfig,
    rng: &mut TestRng,
    mut pick_monoid: impl FnMut(&mut TestRng) -> FiniteMonoid,
) -> Result<(PartialActionDatum, usize)> {
    cfg.validate()?;
    for attempt in 1..=cfg.max_attempts {
        let monoid = pick_monoid(rng);
        let carrier = rng.below(cfg.max_carrier + 1);
        let d = sample_datum(rng, &monoid, carrier);
        if check_partial(&d).is_partial {
            return Ok((d, attempt));
        }
    }
    Err(Error::GiveUp {
        attempts: cfg.max_attempts,
    })
}

pub fn gen_partial_maybe_nonstrong(cfg: &GenConfig, index: u64) -> Result<PartialActionDatum> {
    let mut rng = cfg.rng(index);
    rejection_sample(cfg, &mut rng, |rng| {
        sample_monoid(rng, cfg.max_monoid).monoid
    })
    .map(|(d, _)| d)
}

/// As [`gen_partial_maybe_nonstrong`] with the monoid fixed.
pub fn gen_partial_over(
    cfg: &GenConfig,
    monoid: &FiniteMonoid,
    index: u64,
) -> Result<PartialActionDatum> {
    let mut rng = cfg.rng(index);
    rejection_sample(cfg, &mut rng, |_| monoid.clone()).map(|(d, _)| d)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub samples: usize,
    pub strong: usize,
    pub non_strong: usize,
    pub attempts: usize,
}

/// `cfg.samples` partial actions from [`gen_partial_maybe_nonstrong`] with
/// the strong/non-strong split.
pub fn sample_partials(cfg: &GenConfig) -> Result<(Vec<PartialActionDatum>, Tally)> {
    let mut tally = Tally::default();
    let mut out = Vec::with_capacity(cfg.samples);
    for index in 0..cfg.samples as u64 {
        let mut rng = cfg.rng(index);
        let (d, attempts) = rejection_sample(cfg, &mut rng, |rng| {
            sample_monoid(rng, cfg.max_monoid).monoid
        })?;
        tally.samples += 1;
        tally.attempts += attempts;
        if check_partial(&d).is_strong {
            tally.strong += 1;
        } else {
            tally.non_strong += 1;
        }
        out.push(d);
    }
    Ok((out, tally))
}

/// Every datum over `monoid` on `carrier_size` points (each `α_m` ranging
/// over all partial maps), in odometer order with element `|M|−1`, point
/// `|X|−1` varying fastest and `None` before `Some(0) < Some(1) < …`.
pub fn enumerate_all_data(
    monoid: &FiniteMonoid,
    carrier_size: usize,
    cap: u128,
) -> Result<impl Iterator<Item = PartialActionDatum>> {
    let partial_maps = count_maps(carrier_size, carrier_size + 1);
    let count = partial_maps.saturating_pow(monoid.size() as u32);
    if count > cap {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let monoid = monoid.clone();
    // digit 0 = undefined, digit v+1 = image v
    let digits = monoid.size() * carrier_size;
    let mut state = Some(vec![0usize; digits]);
    Ok(std::iter::from_fn(move || {
        let current = state.take()?;
        let mut next = current.clone();
        let mut advanced = false;
        for slot in (0..digits).rev() {
            next[slot] += 1;
            if next[slot] <= carrier_size {
                advanced = true;
                break;
            }
            next[slot] = 0;
        }
        if advanced {
            state = Some(next);
        }
        let tables: Vec<Vec<Option<usize>>> = if carrier_size == 0 {
            vec![Vec::new(); monoid.size()]
        } else {
            current
                .chunks(carrier_size)
                .map(|row| row.iter().map(|&v| v.checked_sub(1)).collect())
                .collect()
        };
        Some(
            PartialActionDatum::from_lookup(monoid.clone(), carrier_size, &tables)
                .expect("in range"),
        )
    }))
}

/// Every partial action over `monoid` on `carrier_size` points.
pub fn enumerate_all_partial_actions(
    monoid: &FiniteMonoid,
    carrier_size: usize,
    cap: u128,
) -> Result<impl Iterator<Item = PartialActionDatum>> {
    Ok(enumerate_all_data(monoid, carrier_size, cap)?.filter(|d| check_partial(d).is_partial))
}

/// The classes of `M × X` under the equivalence generated by
/// `(nm, x) ~ (n, α_m(x))`, by naive label propagation. Classes are listed by
/// least member, each as sorted `(m, x)` pairs.
pub fn naive_classes(d: &PartialActionDatum) -> Vec<Vec<(usize, usize)>> {
    let monoid = d.monoid();
    let n = d.carrier_size();
    let mut label: Vec<usize> = (0..monoid.size() * n).collect();
    let mut edges = Vec::new();
    for a in monoid.elements() {
        for m in monoid.elements() {
            for x in 0..n {
                if let Some(y) = d.apply(m, x) {
                    edges.push((monoid.mul(a, m) * n + x, a * n + y));
                }
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j) in &edges {
            let low = label[i].min(label[j]);
            for k in [i, j] {
                if label[k] != low {
                    label[k] = low;
                    changed = true;
                }
            }
        }
    }
    let mut roots: Vec<usize> = label.clone();
    roots.sort_unstable();
    roots.dedup();
    roots
        .iter()
        .map(|&r| {
            (0..label.len())
                .filter(|&i| label[i] == r)
                .map(|i| (i / n, i % n))
                .collect()
        })
        .collect()
}

/// Strongness straight from the set-level definition.
pub fn naive_is_strong(d: &PartialActionDatum) -> bool {
    let monoid = d.monoid();
    let n = d.carrier_size();
    let e = monoid.identity();
    let pa1 = (0..n).all(|x| d.apply(e, x) == Some(x));
    pa1 && monoid.elements().all(|m| {
        monoid.elements().all(|k| {
            let nm = monoid.mul(k, m);
            let inverse_image: Vec<usize> = (0..n)
                .filter(|&x| d.apply(m, x).is_some_and(|y| d.apply(k, y).is_some()))
                .collect();
            let meet: Vec<usize> = (0..n)
                .filter(|&x| d.apply(m, x).is_some() && d.apply(nm, x).is_some())
                .collect();
            inverse_image == meet
                && inverse_image
                    .iter()
                    .all(|&x| d.apply(k, d.apply(m, x).unwrap()) == d.apply(nm, x))
        })
    })
}

/// Universal property of the Set pullback of `f` and `g` against every
/// cone from a set of at most `max_cone` points: each commuting pair
/// `(a, b)` has exactly one mediating map.
pub fn set_pullback_is_universal(f: &FinMap, g: &FinMap, max_cone: usize) -> Result<bool> {
    let pb = pullback(f, g)?;
    for w in 0..=max_cone {
        let mut hits = std::collections::HashMap::new();
        for u in all_maps(w, pb.apex_size()) {
            let a = compose(&u, &pb.p1)?;
            let b = compose(&u, &pb.p2)?;
            *hits.entry((a, b)).or_insert(0usize) += 1;
        }
        for a in all_maps(w, f.src_size()) {
            let fa = compose(&a, f)?;
            for b in all_maps(w, g.src_size()) {
                if fa == compose(&b, g)? && hits.get(&(a.clone(), b)).copied().unwrap_or(0) != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Universal property of the pullback of spaces against every continuous
/// cone from each space in `cones`.
pub fn top_pullback_is_universal(
    f: &ContinuousMap,
    g: &ContinuousMap,
    cones: &[FinTopSpace],
) -> Result<bool> {
    let pb = pullback_top(f, g)?;
    let p1 = pb.p1(f.src());
    let p2 = pb.p2(g.src());
    for w in cones {
        let mut hits = std::collections::HashMap::new();
        for u in all_maps(w.size(), pb.space.size()) {
            if is_continuous(&u, w, &pb.space)? {
                let a = compose(&u, p1.map())?;
                let b = compose(&u, p2.map())?;
                *hits.entry((a, b)).or_insert(0usize) += 1;
            }
        }
        let legs_a: Vec<FinMap> = all_maps(w.size(), f.src().size())
            .filter(|a| is_continuous(a, w, f.src()).unwrap_or(false))
            .collect();
        let legs_b: Vec<FinMap> = all_maps(w.size(), g.src().size())
            .filter(|b| is_continuous(b, w, g.src()).unwrap_or(false))
            .collect();
        for a in &legs_a {
            let fa = compose(a, f.map())?;
            for b in &legs_b {
                if fa == compose(b, g.map())?
                    && hits.get(&(a.clone(), b.clone())).copied().unwrap_or(0) != 1
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
