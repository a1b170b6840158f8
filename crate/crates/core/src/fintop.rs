//! Finite topological spaces, the topological version of partial action
//! data, and the strong datum on a two-point space that has no
//! globalization.
//!
//! A topology on `n ≤ 64` points is determined by its minimal open
//! neighbourhoods `U(x)`, stored as bit masks. Open sets are exactly the
//! subsets `S` with `U(x) ⊆ S` for all `x ∈ S`; the explicit open family is
//! derived on demand in a canonical order. A map is continuous iff
//! `f(U(x)) ⊆ U(f(x))` for every `x`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{pullback, FinMap, Pullback, Subset};
use crate::globalize::{build_globalization, verify_globalization, GlobalizationVerdict};
use crate::monoid::cyclic_group;
use crate::paction::{check_partial, AxiomReport, GlobalAction, PartialActionDatum};
use crate::text;

pub const MAX_POINTS: usize = 64;

fn bit(x: usize) -> u64 {
    1u64 << x
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn mask_of(members: &[usize]) -> u64 {
    members.iter().fold(0, |acc, &x| acc | bit(x))
}

fn members_of(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&x| mask & bit(x) != 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinTopSpace {
    size: usize,
    /// `neighborhoods[x]` is the least open set containing `x`.
    neighborhoods: Vec<u64>,
}

impl FinTopSpace {
    fn check_size(size: usize) -> Result<()> {
        if size > MAX_POINTS {
            return Err(Error::InvalidTopology(format!(
                "{size} points exceeds the limit of {MAX_POINTS}"
            )));
        }
        Ok(())
    }

    pub fn discrete(size: usize) -> Result<Self> {
        Self::check_size(size)?;
        Ok(Self {
            size,
            neighborhoods: (0..size).map(bit).collect(),
        })
    }

    pub fn indiscrete(size: usize) -> Result<Self> {
        Self::check_size(size)?;
        Ok(Self {
            size,
            neighborhoods: vec![full_mask(size); size],
        })
    }

    /// From minimal neighbourhoods given as masks; requires `x ∈ U(x)` and
    /// `y ∈ U(x) ⇒ U(y) ⊆ U(x)`.
    pub fn from_neighborhoods(size: usize, neighborhoods: Vec<u64>) -> Result<Self> {
        Self::check_size(size)?;
        if neighborhoods.len() != size {
            return Err(Error::SizeMismatch {
                what: "one neighbourhood per point",
                expected: size,
                found: neighborhoods.len(),
            });
        }
        for (x, &u) in neighborhoods.iter().enumerate() {
            if u & !full_mask(size) != 0 {
                return Err(Error::InvalidTopology(format!(
                    "neighbourhood of {x} leaves the space"
                )));
            }
            if u & bit(x) == 0 {
                return Err(Error::InvalidTopology(format!(
                    "neighbourhood of {x} does not contain it"
                )));
            }
            if let Some(y) = members_of(u).find(|&y| neighborhoods[y] & !u != 0) {
                return Err(Error::InvalidTopology(format!(
                    "neighbourhood of {y} is not inside that of {x}"
                )));
            }
        }
        Ok(Self {
            size,
            neighborhoods,
        })
    }

    /// From an explicit open family, which must contain `∅` and the whole
    /// space and be closed under binary unions and intersections.
    pub fn from_opens(size: usize, opens: &[Subset]) -> Result<Self> {
        Self::check_size(size)?;
        let mut family = BTreeSet::new();
        for open in opens {
            if open.ambient_size() != size {
                return Err(Error::SizeMismatch {
                    what: "open set ambient size",
                    expected: size,
                    found: open.ambient_size(),
                });
            }
            family.insert(mask_of(open.members()));
        }
        for required in [0, full_mask(size)] {
            if !family.contains(&required) {
                return Err(Error::InvalidTopology(
                    "the empty set and the whole space must be open".into(),
                ));
            }
        }
        for &a in &family {
            for &b in &family {
                if !family.contains(&(a | b)) || !family.contains(&(a & b)) {
                    return Err(Error::InvalidTopology(
                        "open family is not closed under union and intersection".into(),
                    ));
                }
            }
        }
        let neighborhoods = (0..size)
            .map(|x| {
                family
                    .iter()
                    .filter(|&&o| o & bit(x) != 0)
                    .fold(full_mask(size), |acc, &o| acc & o)
            })
            .collect();
        Ok(Self {
            size,
            neighborhoods,
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighborhood_mask(&self, x: usize) -> u64 {
        self.neighborhoods[x]
    }

    pub fn neighborhood(&self, x: usize) -> Subset {
        Subset::from_predicate(self.size, |y| self.neighborhoods[x] & bit(y) != 0)
    }

    pub fn is_open(&self, set: &Subset) -> bool {
        set.ambient_size() == self.size && self.is_open_mask(mask_of(set.members()))
    }

    fn is_open_mask(&self, mask: u64) -> bool {
        members_of(mask).all(|x| self.neighborhoods[x] & !mask == 0)
    }

    /// All open sets, ordered by their sorted member lists.
    pub fn opens(&self) -> Vec<Subset> {
        let mut masks = BTreeSet::from([0u64]);
        for &u in &self.neighborhoods {
            let unions: Vec<u64> = masks.iter().map(|&s| s | u).collect();
            masks.extend(unions);
        }
        let mut opens: Vec<Subset> = masks
            .into_iter()
            .map(|m| Subset::new(self.size, members_of(m).collect()).expect("sorted"))
            .collect();
        opens.sort_by(|a, b| a.members().cmp(b.members()));
        opens
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.size).all(|x| self.neighborhoods[x] == bit(x))
    }

    pub fn is_indiscrete(&self) -> bool {
        self.neighborhoods
            .iter()
            .all(|&u| u == full_mask(self.size))
    }

    /// Every open set of `other` is open here.
    pub fn is_finer_than(&self, other: &FinTopSpace) -> bool {
        self.size == other.size
            && self
                .neighborhoods
                .iter()
                .zip(&other.neighborhoods)
                .all(|(&mine, &theirs)| mine & !theirs == 0)
    }

    /// Parses `top <size>` followed by one open set per line (`-` for `∅`).
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `top <size>` header".into(),
        })?;
        let size = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["top", n] => text::parse_index(n, line_no)?,
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected `top <size>`".into(),
                })
            }
        };
        let mut opens = Vec::new();
        for (line_no, line) in lines {
            let mut members = if line == "-" {
                Vec::new()
            } else {
                text::parse_indices(line, line_no)?
            };
            members.sort_unstable();
            members.dedup();
            let open = Subset::new(size, members).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            opens.push(open);
        }
        Self::from_opens(size, &opens)
    }
}

impl fmt::Display for FinTopSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "top {}", self.size)?;
        for open in self.opens() {
            if open.is_empty() {
                writeln!(f, "-")?;
            } else {
                writeln!(f, "{}", text::join(open.members()))?;
            }
        }
        Ok(())
    }
}

/// Every topology on `size` points, ordered by neighbourhood masks.
/// Intended for `size ≤ 5`.
pub fn all_topologies(size: usize) -> Result<Vec<FinTopSpace>> {
    let choices = 1u128 << (size.saturating_sub(1) * size);
    let cap = 1u128 << 20;
    if choices > cap {
        return Err(Error::EnumerationTooLarge {
            count: choices,
            cap,
        });
    }
    // neighbourhood of x = {x} ∪ (bits of the choice spread over the others)
    let spread = |x: usize, choice: u64| -> u64 {
        let low = choice & (bit(x) - 1);
        let high = (choice >> x) << (x + 1);
        low | high | bit(x)
    };
    let per_point = 1u64 << size.saturating_sub(1);
    let mut found = Vec::new();
    let mut choice = vec![0u64; size];
    loop {
        let neighborhoods: Vec<u64> = (0..size).map(|x| spread(x, choice[x])).collect();
        if let Ok(space) = FinTopSpace::from_neighborhoods(size, neighborhoods) {
            found.push(space);
        }
        let mut slot = size;
        loop {
            if slot == 0 {
                return Ok(found);
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < per_point {
                break;
            }
            choice[slot] = 0;
        }
    }
}

fn check_map_sizes(f: &FinMap, src: &FinTopSpace, dst: &FinTopSpace) -> Result<()> {
    if f.src_size() != src.size() || f.dst_size() != dst.size() {
        return Err(Error::SizeMismatch {
            what: "map vs spaces",
            expected: src.size(),
            found: f.src_size(),
        });
    }
    Ok(())
}

fn image_mask(f: &FinMap, mask: u64) -> u64 {
    members_of(mask).fold(0, |acc, x| acc | bit(f.apply(x)))
}

pub fn is_continuous(f: &FinMap, src: &FinTopSpace, dst: &FinTopSpace) -> Result<bool> {
    check_map_sizes(f, src, dst)?;
    Ok((0..src.size())
        .all(|x| image_mask(f, src.neighborhood_mask(x)) & !dst.neighborhood_mask(f.apply(x)) == 0))
}

/// A continuous bijection with continuous inverse.
pub fn is_homeomorphism(f: &FinMap, src: &FinTopSpace, dst: &FinTopSpace) -> Result<bool> {
    check_map_sizes(f, src, dst)?;
    if !(f.is_mono() && f.is_surjective()) {
        return Ok(false);
    }
    let mut inverse = vec![0; f.src_size()];
    for (x, &y) in f.images().iter().enumerate() {
        inverse[y] = x;
    }
    let inverse = FinMap::new(inverse, src.size())?;
    Ok(is_continuous(f, src, dst)? && is_continuous(&inverse, dst, src)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    map: FinMap,
    src: FinTopSpace,
    dst: FinTopSpace,
}

impl ContinuousMap {
    pub fn new(map: FinMap, src: FinTopSpace, dst: FinTopSpace) -> Result<Self> {
        if !is_continuous(&map, &src, &dst)? {
            return Err(Error::Discontinuous);
        }
        Ok(Self { map, src, dst })
    }

    pub fn map(&self) -> &FinMap {
        &self.map
    }

    pub fn src(&self) -> &FinTopSpace {
        &self.src
    }

    pub fn dst(&self) -> &FinTopSpace {
        &self.dst
    }
}

/// The Set pullback with the subspace topology of the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopPullback {
    pub set: Pullback,
    pub space: FinTopSpace,
}

impl TopPullback {
    pub fn p1(&self, f_src: &FinTopSpace) -> ContinuousMap {
        ContinuousMap::new(self.set.p1.clone(), self.space.clone(), f_src.clone())
            .expect("projections of a product are continuous")
    }

    pub fn p2(&self, g_src: &FinTopSpace) -> ContinuousMap {
        ContinuousMap::new(self.set.p2.clone(), self.space.clone(), g_src.clone())
            .expect("projections of a product are continuous")
    }
}

fn pullback_of(
    f: &FinMap,
    f_src: &FinTopSpace,
    g: &FinMap,
    g_src: &FinTopSpace,
) -> Result<TopPullback> {
    let set = pullback(f, g)?;
    FinTopSpace::check_size(set.apex_size())?;
    let neighborhoods = set
        .pairs
        .iter()
        .map(|&(a, b)| {
            let (ua, ub) = (f_src.neighborhood_mask(a), g_src.neighborhood_mask(b));
            set.pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a2, b2))| ua & bit(a2) != 0 && ub & bit(b2) != 0)
                .fold(0, |acc, (i, _)| acc | bit(i))
        })
        .collect();
    let space = FinTopSpace::from_neighborhoods(set.apex_size(), neighborhoods)?;
    Ok(TopPullback { set, space })
}

pub fn pullback_top(f: &ContinuousMap, g: &ContinuousMap) -> Result<TopPullback> {
    if f.dst != g.dst {
        return Err(Error::SizeMismatch {
            what: "pullback legs must share a codomain",
            expected: f.dst.size(),
            found: g.dst.size(),
        });
    }
    pullback_of(&f.map, &f.src, &g.map, &g.src)
}

/// The final topology along a surjection: `V` is open iff `c⁻¹(V)` is.
pub fn quotient_top(space: &FinTopSpace, c: &FinMap) -> Result<FinTopSpace> {
    if c.src_size() != space.size() {
        return Err(Error::SizeMismatch {
            what: "quotient map source",
            expected: space.size(),
            found: c.src_size(),
        });
    }
    if !c.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let target = c.dst_size();
    FinTopSpace::check_size(target)?;
    let preimage = |mask: u64| -> u64 {
        (0..space.size())
            .filter(|&x| mask & bit(c.apply(x)) != 0)
            .fold(0, |acc, x| acc | bit(x))
    };
    let neighborhoods = (0..target)
        .map(|y| {
            // least V ∋ y with c⁻¹(V) open
            let mut v = bit(y);
            loop {
                let up = members_of(preimage(v)).fold(0, |acc, x| acc | space.neighborhood_mask(x));
                let next = v | image_mask(c, up);
                if next == v {
                    return v;
                }
                v = next;
            }
        })
        .collect();
    FinTopSpace::from_neighborhoods(target, neighborhoods)
}

/// Disjoint union; the summands occupy consecutive index blocks.
pub fn coproduct(spaces: &[FinTopSpace]) -> Result<FinTopSpace> {
    let size = spaces.iter().map(FinTopSpace::size).sum();
    FinTopSpace::check_size(size)?;
    let mut neighborhoods = Vec::with_capacity(size);
    let mut offset = 0;
    for space in spaces {
        neighborhoods.extend(space.neighborhoods.iter().map(|&u| u << offset));
        offset += space.size();
    }
    FinTopSpace::from_neighborhoods(size, neighborhoods)
}

/// A partial action datum in finite spaces: the Set datum, a topology on the
/// carrier, and a topology on each domain such that `ι_m` and `α_m` are
/// continuous and `ι_m` is injective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDatum {
    set: PartialActionDatum,
    space: FinTopSpace,
    domains: Vec<FinTopSpace>,
}

impl TopDatum {
    pub fn new(
        set: PartialActionDatum,
        space: FinTopSpace,
        domains: Vec<FinTopSpace>,
    ) -> Result<Self> {
        if space.size() != set.carrier_size() {
            return Err(Error::SizeMismatch {
                what: "space vs carrier",
                expected: set.carrier_size(),
                found: space.size(),
            });
        }
        if domains.len() != set.monoid().size() {
            return Err(Error::SizeMismatch {
                what: "one domain topology per monoid element",
                expected: set.monoid().size(),
                found: domains.len(),
            });
        }
        for (m, dom) in domains.iter().enumerate() {
            if dom.size() != set.domain(m).len() {
                return Err(Error::SizeMismatch {
                    what: "domain topology size",
                    expected: set.domain(m).len(),
                    found: dom.size(),
                });
            }
            if !is_continuous(&set.inclusion(m), dom, &space)?
                || !is_continuous(set.map(m), dom, &space)?
            {
                return Err(Error::NotContinuous { m });
            }
        }
        Ok(Self {
            set,
            space,
            domains,
        })
    }

    /// A global action on a space; every `β_m` must be continuous.
    pub fn from_global(action: &GlobalAction, space: FinTopSpace) -> Result<Self> {
        let domains = vec![space.clone(); action.monoid().size()];
        Self::new(action.to_datum(), space, domains)
    }

    pub fn set(&self) -> &PartialActionDatum {
        &self.set
    }

    pub fn space(&self) -> &FinTopSpace {
        &self.space
    }

    pub fn domain_space(&self, m: usize) -> &FinTopSpace {
        &self.domains[m]
    }

    /// `α_m⁻¹(dom α_n)`, the pullback of `α_m` and `ι_n`.
    pub fn inverse_image(&self, m: usize, n: usize) -> Result<TopPullback> {
        pullback_of(
            self.set.map(m),
            &self.domains[m],
            &self.set.inclusion(n),
            &self.domains[n],
        )
    }

    /// `dom α_m ∩ dom α_n`, the pullback of `ι_m` and `ι_n`.
    pub fn intersection(&self, m: usize, n: usize) -> Result<TopPullback> {
        pullback_of(
            &self.set.inclusion(m),
            &self.domains[m],
            &self.set.inclusion(n),
            &self.domains[n],
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopAxiomReport {
    pub set: AxiomReport,
    /// `dom α_e` carries the topology of the carrier.
    pub identity_homeomorphic: bool,
    /// First `(m, n)` where `α_m⁻¹(dom α_n) → dom α_{nm}` is not continuous.
    pub inclusion_failure: Option<(usize, usize)>,
    /// First `(m, n)` where `α_m⁻¹(dom α_n) ≅ dom α_m ∩ dom α_{nm}` fails.
    pub strong_failure: Option<(usize, usize)>,
    pub is_partial: bool,
    pub is_strong: bool,
}

/// Position in `dom α_k` of the carrier point `x`.
fn position_map(d: &PartialActionDatum, k: usize, points: impl Iterator<Item = usize>) -> FinMap {
    let dom = d.domain(k);
    let images = points
        .map(|x| dom.position(x).expect("point lies in the domain"))
        .collect();
    FinMap::new(images, dom.len()).expect("positions in range")
}

pub fn check_top(d: &TopDatum) -> Result<TopAxiomReport> {
    let set = check_partial(&d.set);
    let monoid = d.set.monoid();
    let e = monoid.identity();
    let identity_homeomorphic = d.domains[e] == d.space;
    let mut inclusion_failure = None;
    let mut strong_failure = None;
    if set.is_partial {
        'outer: for m in monoid.elements() {
            for n in monoid.elements() {
                let nm = monoid.mul(n, m);
                let members = d.set.domain(m).members();
                let inv = d.inverse_image(m, n)?;
                let into_nm =
                    position_map(&d.set, nm, inv.set.pairs.iter().map(|&(j, _)| members[j]));
                if !is_continuous(&into_nm, &inv.space, &d.domains[nm])? {
                    inclusion_failure = Some((m, n));
                    break 'outer;
                }
                if strong_failure.is_none() && set.is_strong {
                    let meet = d.intersection(m, nm)?;
                    let theta_images = inv
                        .set
                        .pairs
                        .iter()
                        .enumerate()
                        .map(|(i, &(j, _))| {
                            let pair = (j, into_nm.apply(i));
                            meet.set
                                .pairs
                                .iter()
                                .position(|&p| p == pair)
                                .expect("strong datum: θ lands in the intersection")
                        })
                        .collect();
                    let theta = FinMap::new(theta_images, meet.set.apex_size())?;
                    if !is_homeomorphism(&theta, &inv.space, &meet.space)? {
                        strong_failure = Some((m, n));
                    }
                }
            }
        }
    }
    let is_partial = set.is_partial && identity_homeomorphic && inclusion_failure.is_none();
    let is_strong = is_partial && set.is_strong && strong_failure.is_none();
    Ok(TopAxiomReport {
        set,
        identity_homeomorphic,
        inclusion_failure,
        strong_failure,
        is_partial,
        is_strong,
    })
}

/// The reflection built in finite spaces: the Set reflection with the
/// quotient topology of `|M|` copies of the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopReflection {
    pub space: FinTopSpace,
    pub action: GlobalAction,
    pub embed: FinMap,
}

pub fn build_top_reflection(d: &TopDatum) -> Result<TopReflection> {
    let glob = build_globalization(&d.set);
    let copies = vec![d.space.clone(); d.set.monoid().size()];
    let space = quotient_top(&coproduct(&copies)?, glob.projection())?;
    for m in d.set.monoid().elements() {
        if !is_continuous(glob.action().map(m), &space, &space)? {
            return Err(Error::NotContinuous { m });
        }
    }
    if !is_continuous(glob.embed(), &d.space, &space)? {
        return Err(Error::NotContinuous {
            m: d.set.monoid().identity(),
        });
    }
    Ok(TopReflection {
        space,
        action: glob.action().clone(),
        embed: glob.embed().clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopGlobalizationVerdict {
    pub set: GlobalizationVerdict,
    pub is_globalization: bool,
    /// First `m` whose square is not a pullback of spaces.
    pub failing_m: Option<usize>,
    /// For `failing_m` when the Set square is a pullback: the induced map
    /// from the pullback of spaces back to `dom α_m`, and whether it is
    /// continuous.
    pub mediating: Option<FinMap>,
    pub mediating_continuous: Option<bool>,
}

/// Decides whether `r` is a globalization of `d` in finite spaces: every
/// square `(ι_m, α_m; β_m ∘ ι, ι)` must be a pullback of spaces.
pub fn verify_top_globalization(
    d: &TopDatum,
    r: &TopReflection,
) -> Result<TopGlobalizationVerdict> {
    let set = verify_globalization(&d.set, &r.action, &r.embed)?;
    if !set.is_globalization {
        return Ok(TopGlobalizationVerdict {
            failing_m: set.failing_m,
            set,
            is_globalization: false,
            mediating: None,
            mediating_continuous: None,
        });
    }
    for m in d.set.monoid().elements() {
        let shifted = crate::finset::compose(&r.embed, r.action.map(m))?;
        let apex = pullback_of(&shifted, &d.space, &r.embed, &d.space)?;
        // the Set square is a pullback, so apex pairs are the graph of α_m
        let mediating = position_map(&d.set, m, apex.set.pairs.iter().map(|&(x, _)| x));
        if !is_homeomorphism(&mediating, &apex.space, &d.domains[m])? {
            let continuous = is_continuous(&mediating, &apex.space, &d.domains[m])?;
            return Ok(TopGlobalizationVerdict {
                set,
                is_globalization: false,
                failing_m: Some(m),
                mediating: Some(mediating),
                mediating_continuous: Some(continuous),
            });
        }
    }
    Ok(TopGlobalizationVerdict {
        set,
        is_globalization: true,
        failing_m: None,
        mediating: None,
        mediating_continuous: None,
    })
}

/// `Z₂` acting on a space `(X, τ)` with `α_e = id` and `α_1` the identity on
/// `(X, τ')`.
pub fn counterexample_datum(tau: &FinTopSpace, tau_prime: &FinTopSpace) -> Result<TopDatum> {
    let n = tau.size();
    if tau_prime.size() != n {
        return Err(Error::SizeMismatch {
            what: "both topologies live on the same set",
            expected: n,
            found: tau_prime.size(),
        });
    }
    let set = GlobalAction::trivial(cyclic_group(2), n).to_datum();
    TopDatum::new(set, tau.clone(), vec![tau.clone(), tau_prime.clone()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub top: TopAxiomReport,
    pub set_globalizable: bool,
    pub reflection: TopReflection,
    pub verdict: TopGlobalizationVerdict,
}

impl CounterexampleReport {
    /// Strong in spaces, yet the reflection is not a globalization.
    pub fn confirmed(&self) -> bool {
        self.top.is_strong && !self.verdict.is_globalization
    }
}

pub fn counterexample_report(
    tau: &FinTopSpace,
    tau_prime: &FinTopSpace,
) -> Result<CounterexampleReport> {
    let d = counterexample_datum(tau, tau_prime)?;
    let top = check_top(&d)?;
    let glob = build_globalization(d.set());
    let set_globalizable =
        verify_globalization(d.set(), glob.action(), glob.embed())?.is_globalization;
    let reflection = build_top_reflection(&d)?;
    let verdict = verify_top_globalization(&d, &reflection)?;
    Ok(CounterexampleReport {
        top,
        set_globalizable,
        reflection,
        verdict,
    })
}

/// Two points, `τ` indiscrete and `τ'` discrete: strong, not globalizable.
pub fn verify_top_counterexample() -> bool {
    let tau = FinTopSpace::indiscrete(2).expect("two points");
    let tau_prime = FinTopSpace::discrete(2).expect("two points");
    counterexample_report(&tau, &tau_prime).is_ok_and(|r| r.confirmed())
}
