//! The diagrammatic description of the reflection.
//!
//! A datum `α` on `X` determines a functor `F` from the index category with
//! objects `M ⊔ (M × M)` into `Set`: `m ↦ X`, `(m, n) ↦ dom α_n`, with arrows
//! `(m, n) → mn` carrying `ι_n` and `(m, n) → m` carrying `α_n`. Collapsing the
//! arrows gives the parallel pair `p, q : ∐ dom α_n ⇉ ∐_M X` between the
//! shift actions `φ` and `ψ`. The reflection of `α` is the coequalizer of
//! `p, q` in global actions, and `H` identifies maps `X → Z` with datum
//! morphisms `ψ → γ`.

use crate::error::{Error, Result};
use crate::finset::{
    all_maps, coequalizer, colimit_of_diagram, compose, count_maps, is_cocone, Arrow, FinMap,
    FiniteDiagram,
};
use crate::globalize::{build_globalization, verify_reflection, DEFAULT_ENUMERATION_CAP};
use crate::paction::{
    enumerate_global_actions, is_datum_morphism_to_global, is_equivariant, GlobalAction,
    PartialActionDatum,
};

/// Flat numbering of `∐_{m} X` and `∐_{(m,n)} dom α_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductIndexing {
    monoid_size: usize,
    carrier_size: usize,
    dom_sizes: Vec<usize>,
    /// Start of block `(m, n)`, indexed by `m·|M| + n`, plus the total.
    block_starts: Vec<usize>,
}

impl CoproductIndexing {
    pub fn new(d: &PartialActionDatum) -> Self {
        let monoid_size = d.monoid().size();
        let dom_sizes: Vec<usize> = d.parts().iter().map(|a| a.domain().len()).collect();
        let mut block_starts = Vec::with_capacity(monoid_size * monoid_size + 1);
        let mut acc = 0;
        for _m in 0..monoid_size {
            for &len in &dom_sizes {
                block_starts.push(acc);
                acc += len;
            }
        }
        block_starts.push(acc);
        Self {
            monoid_size,
            carrier_size: d.carrier_size(),
            dom_sizes,
            block_starts,
        }
    }

    /// `|M| · |X|`.
    pub fn total_x(&self) -> usize {
        self.monoid_size * self.carrier_size
    }

    /// `Σ_{m,n} |dom α_n|`.
    pub fn total_dom(&self) -> usize {
        self.block_starts[self.block_starts.len() - 1]
    }

    #[inline]
    pub fn flat_x(&self, m: usize, x: usize) -> usize {
        debug_assert!(m < self.monoid_size && x < self.carrier_size);
        m * self.carrier_size + x
    }

    #[inline]
    pub fn unflat_x(&self, i: usize) -> (usize, usize) {
        (i / self.carrier_size, i % self.carrier_size)
    }

    /// Index of `(m, n, j)` where `j` is a position in `dom α_n`.
    #[inline]
    pub fn flat_dom(&self, m: usize, n: usize, j: usize) -> usize {
        debug_assert!(j < self.dom_sizes[n]);
        self.block_starts[m * self.monoid_size + n] + j
    }

    pub fn unflat_dom(&self, i: usize) -> (usize, usize, usize) {
        // last block whose start is ≤ i and which is non-empty
        let block = self.block_starts.partition_point(|&s| s <= i) - 1;
        (
            block / self.monoid_size,
            block % self.monoid_size,
            i - self.block_starts[block],
        )
    }

    /// The coproduct injection `u_m : X → ∐ X`.
    pub fn u(&self, m: usize) -> FinMap {
        let images = (0..self.carrier_size).map(|x| self.flat_x(m, x)).collect();
        FinMap::new(images, self.total_x()).expect("in range")
    }
}

/// The pair `p = ∐ u_{mn} ∘ ι_n` and `q = ∐ u_m ∘ α_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PQPair {
    pub indexing: CoproductIndexing,
    pub p: FinMap,
    pub q: FinMap,
}

pub fn build_functor_f(d: &PartialActionDatum) -> FiniteDiagram {
    let monoid = d.monoid();
    let k = monoid.size();
    let mut node_sizes = vec![d.carrier_size(); k];
    let mut arrows = Vec::with_capacity(2 * k * k);
    for m in monoid.elements() {
        for n in monoid.elements() {
            let node = k + m * k + n;
            node_sizes.push(d.domain(n).len());
            arrows.push(Arrow {
                src: node,
                dst: monoid.mul(m, n),
                map: d.inclusion(n),
            });
            arrows.push(Arrow {
                src: node,
                dst: m,
                map: d.map(n).clone(),
            });
        }
    }
    FiniteDiagram::new(node_sizes, arrows).expect("arrow sizes match the nodes")
}

pub fn build_pq(d: &PartialActionDatum) -> PQPair {
    let monoid = d.monoid();
    let indexing = CoproductIndexing::new(d);
    let mut p = Vec::with_capacity(indexing.total_dom());
    let mut q = Vec::with_capacity(indexing.total_dom());
    for m in monoid.elements() {
        for n in monoid.elements() {
            let part = d.part(n);
            for (j, &x) in part.domain().members().iter().enumerate() {
                p.push(indexing.flat_x(monoid.mul(m, n), x));
                q.push(indexing.flat_x(m, part.map().apply(j)));
            }
        }
    }
    let total = indexing.total_x();
    PQPair {
        p: FinMap::new(p, total).expect("in range"),
        q: FinMap::new(q, total).expect("in range"),
        indexing,
    }
}

/// The shift actions `φ` on `∐ dom α_n` and `ψ` on `∐ X`.
pub fn coproduct_actions(d: &PartialActionDatum) -> (GlobalAction, GlobalAction) {
    let monoid = d.monoid();
    let ix = CoproductIndexing::new(d);
    let phi = monoid
        .elements()
        .map(|m| {
            let images = (0..ix.total_dom())
                .map(|i| {
                    let (s, t, j) = ix.unflat_dom(i);
                    ix.flat_dom(monoid.mul(m, s), t, j)
                })
                .collect();
            FinMap::new(images, ix.total_dom()).expect("in range")
        })
        .collect();
    let psi = monoid
        .elements()
        .map(|m| {
            let images = (0..ix.total_x())
                .map(|i| {
                    let (s, x) = ix.unflat_x(i);
                    ix.flat_x(monoid.mul(m, s), x)
                })
                .collect();
            FinMap::new(images, ix.total_x()).expect("in range")
        })
        .collect();
    (
        GlobalAction::new(monoid.clone(), ix.total_dom(), phi).expect("left translation"),
        GlobalAction::new(monoid.clone(), ix.total_x(), psi).expect("left translation"),
    )
}

/// Transports `ψ` along a surjection `c : ∐ X → Y`, giving
/// `β_m(c(s, x)) = c(ms, x)` and `ι = c ∘ u_e`.
fn action_through_projection(d: &PartialActionDatum, c: &FinMap) -> Result<(GlobalAction, FinMap)> {
    let monoid = d.monoid();
    let ix = CoproductIndexing::new(d);
    if c.src_size() != ix.total_x() {
        return Err(Error::SizeMismatch {
            what: "projection source vs |M|·|X|",
            expected: ix.total_x(),
            found: c.src_size(),
        });
    }
    if !c.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let y_size = c.dst_size();
    let mut maps = Vec::with_capacity(monoid.size());
    for m in monoid.elements() {
        let mut images = vec![usize::MAX; y_size];
        for i in 0..ix.total_x() {
            let (s, x) = ix.unflat_x(i);
            let target = c.apply(ix.flat_x(monoid.mul(m, s), x));
            let slot = &mut images[c.apply(i)];
            if *slot == usize::MAX {
                *slot = target;
            } else if *slot != target {
                return Err(Error::NotEquivariant { m });
            }
        }
        maps.push(FinMap::new(images, y_size)?);
    }
    let action = GlobalAction::new(monoid.clone(), y_size, maps)?;
    let embed = compose(&ix.u(monoid.identity()), c)?;
    Ok((action, embed))
}

/// The action induced on the quotient of `∐ X` by a coequalizer `c` of
/// `p, q`, together with `ι = c ∘ u_e`.
pub fn associated_action_from_coequalizer(
    d: &PartialActionDatum,
    c: &FinMap,
) -> Result<(GlobalAction, FinMap)> {
    let pq = build_pq(d);
    if c.src_size() != pq.indexing.total_x() {
        return Err(Error::SizeMismatch {
            what: "projection source vs |M|·|X|",
            expected: pq.indexing.total_x(),
            found: c.src_size(),
        });
    }
    if compose(&pq.p, c)? != compose(&pq.q, c)? {
        return Err(Error::NotCoequalizing);
    }
    action_through_projection(d, c)
}

/// The action induced on the colimit of `F`: `β_m(η_s(x)) = η_{ms}(x)` and
/// `ι = η_e`. `legs` must list one leg per node of `build_functor_f(d)`.
pub fn associated_action_from_colimit(
    d: &PartialActionDatum,
    apex_size: usize,
    legs: &[FinMap],
) -> Result<(GlobalAction, FinMap)> {
    let k = d.monoid().size();
    let diagram = build_functor_f(d);
    if !is_cocone(&diagram, apex_size, legs) {
        return Err(Error::NotCoequalizing);
    }
    let mut images = Vec::with_capacity(k * d.carrier_size());
    for leg in &legs[..k] {
        images.extend_from_slice(leg.images());
    }
    action_through_projection(d, &FinMap::new(images, apex_size)?)
}

/// `H_{X,γ}(f)(m, x) = γ_m(f(x))`.
pub fn h_map(d: &PartialActionDatum, target: &GlobalAction, f: &FinMap) -> Result<FinMap> {
    if d.monoid() != target.monoid() {
        return Err(Error::MonoidMismatch);
    }
    if f.src_size() != d.carrier_size() || f.dst_size() != target.carrier_size() {
        return Err(Error::SizeMismatch {
            what: "map X → Z",
            expected: d.carrier_size(),
            found: f.src_size(),
        });
    }
    let images = d
        .monoid()
        .elements()
        .flat_map(|m| f.images().iter().map(move |&z| target.act(m, z)))
        .collect();
    FinMap::new(images, target.carrier_size())
}

/// `Γ ↦ Γ ∘ u_e`.
pub fn h_inverse(d: &PartialActionDatum, gamma: &FinMap) -> Result<FinMap> {
    let ix = CoproductIndexing::new(d);
    if gamma.src_size() != ix.total_x() {
        return Err(Error::SizeMismatch {
            what: "map ∐X → Z",
            expected: ix.total_x(),
            found: gamma.src_size(),
        });
    }
    compose(&ix.u(d.monoid().identity()), gamma)
}

/// `(f is a datum morphism, H(f) ∘ p = H(f) ∘ q)`; the two always agree.
pub fn f_coequalizes_iff_datum(
    d: &PartialActionDatum,
    target: &GlobalAction,
    f: &FinMap,
) -> Result<(bool, bool)> {
    let is_morphism = is_datum_morphism_to_global(f, d, target)?;
    let h = h_map(d, target, f)?;
    let pq = build_pq(d);
    let coequalizes = compose(&pq.p, &h)? == compose(&pq.q, &h)?;
    Ok((is_morphism, coequalizes))
}

/// The shifted cocone `η^m`: `η^m_s = η_{ms}` and `η^m_{(s,t)} = η_{(ms,t)}`.
pub fn shift_cocone(d: &PartialActionDatum, legs: &[FinMap], m: usize) -> Vec<FinMap> {
    let monoid = d.monoid();
    let k = monoid.size();
    let mut shifted: Vec<FinMap> = monoid
        .elements()
        .map(|s| legs[monoid.mul(m, s)].clone())
        .collect();
    for s in monoid.elements() {
        for t in monoid.elements() {
            shifted.push(legs[k + monoid.mul(m, s) * k + t].clone());
        }
    }
    shifted
}

/// `(|Y|, β, ι)` as produced by one construction route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteResult {
    pub action: GlobalAction,
    pub embed: FinMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteComparison {
    pub quotient: RouteResult,
    pub coequalizer: RouteResult,
    pub colimit: RouteResult,
}

impl RouteComparison {
    /// All three routes produced identical tables.
    pub fn all_equal(&self) -> bool {
        self.quotient == self.coequalizer && self.quotient == self.colimit
    }
}

/// Builds the reflection by the quotient of `M × X`, by the coequalizer of
/// `p, q`, and by the colimit of `F`.
pub fn compare_routes(d: &PartialActionDatum) -> Result<RouteComparison> {
    let glob = build_globalization(d);
    let quotient = RouteResult {
        action: glob.action().clone(),
        embed: glob.embed().clone(),
    };
    let pq = build_pq(d);
    let coeq = coequalizer(&pq.p, &pq.q)?;
    let (action, embed) = associated_action_from_coequalizer(d, &coeq.projection)?;
    let coequalizer = RouteResult { action, embed };
    let colim = colimit_of_diagram(&build_functor_f(d));
    let (action, embed) = associated_action_from_colimit(d, colim.size, &colim.injections)?;
    let colimit = RouteResult { action, embed };
    Ok(RouteComparison {
        quotient,
        coequalizer,
        colimit,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremConfig {
    /// Targets are all global actions on at most this many points.
    pub max_target_size: usize,
    pub cap: u128,
}

impl Default for TheoremConfig {
    fn default() -> Self {
        Self {
            max_target_size: 2,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremReport {
    /// `H(r)` is a coequalizer of `p, q` among global actions.
    pub reflection_gives_coequalizer: bool,
    /// `c ∘ u_e` is a reflection for the Set coequalizer `c` of `p, q`.
    pub coequalizer_gives_reflection: bool,
    pub targets_checked: usize,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.reflection_gives_coequalizer && self.coequalizer_gives_reflection
    }
}

/// Whether `(y_action, proj)` is a coequalizer of `p, q` in global actions
/// relative to `target`: every equivariant `Γ : ψ → γ` with `Γp = Γq`
/// factors through `proj` by exactly one equivariant map.
fn is_coequalizer_against(
    psi: &GlobalAction,
    pq: &PQPair,
    y_action: &GlobalAction,
    proj: &FinMap,
    target: &GlobalAction,
) -> Result<bool> {
    if !is_equivariant(proj, psi, y_action) || compose(&pq.p, proj)? != compose(&pq.q, proj)? {
        return Ok(false);
    }
    let z = target.carrier_size();
    let mediators: Vec<FinMap> = all_maps(y_action.carrier_size(), z)
        .filter(|f| is_equivariant(f, y_action, target))
        .collect();
    for gamma in all_maps(psi.carrier_size(), z) {
        if !is_equivariant(&gamma, psi, target)
            || compose(&pq.p, &gamma)? != compose(&pq.q, &gamma)?
        {
            continue;
        }
        let factorizations = mediators
            .iter()
            .filter(|f| compose(proj, f).expect("sizes") == gamma)
            .count();
        if factorizations != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_reflection_coequalizer_theorem(d: &PartialActionDatum) -> Result<bool> {
    Ok(check_reflection_coequalizer_theorem_with(d, TheoremConfig::default())?.holds())
}

/// Checks both directions of the theorem against every global action on at
/// most `cfg.max_target_size` points.
pub fn check_reflection_coequalizer_theorem_with(
    d: &PartialActionDatum,
    cfg: TheoremConfig,
) -> Result<TheoremReport> {
    let monoid = d.monoid();
    let (_phi, psi) = coproduct_actions(d);
    let pq = build_pq(d);
    let glob = build_globalization(d);

    let coeq = coequalizer(&pq.p, &pq.q)?;
    let (coeq_action, coeq_embed) = associated_action_from_coequalizer(d, &coeq.projection)?;

    let largest = [
        count_maps(psi.carrier_size(), cfg.max_target_size),
        count_maps(glob.quotient_size(), cfg.max_target_size),
        count_maps(coeq.size, cfg.max_target_size),
    ]
    .into_iter()
    .max()
    .unwrap_or(0);
    if largest > cfg.cap {
        return Err(Error::EnumerationTooLarge {
            count: largest,
            cap: cfg.cap,
        });
    }

    let h_r = h_map(d, glob.action(), glob.embed())?;
    let mut report = TheoremReport {
        reflection_gives_coequalizer: true,
        coequalizer_gives_reflection: true,
        targets_checked: 0,
    };
    for z in 0..=cfg.max_target_size {
        for target in enumerate_global_actions(monoid, z, cfg.cap)? {
            report.targets_checked += 1;
            if report.reflection_gives_coequalizer
                && !is_coequalizer_against(&psi, &pq, glob.action(), &h_r, &target)?
            {
                report.reflection_gives_coequalizer = false;
            }
            if report.coequalizer_gives_reflection
                && !verify_reflection(d, &coeq_action, &coeq_embed, &target, cfg.cap)?
            {
                report.coequalizer_gives_reflection = false;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::is_cocone;
    use crate::monoid::{cyclic_group, FiniteMonoid};
    use crate::paction::is_datum_morphism;

    fn example(image: usize) -> PartialActionDatum {
        PartialActionDatum::from_lookup(
            FiniteMonoid::idempotent_pair(),
            2,
            &[vec![Some(0), Some(1)], vec![Some(image), None]],
        )
        .unwrap()
    }

    fn swap_action() -> GlobalAction {
        let swap = FinMap::new(vec![1, 0], 2).unwrap();
        GlobalAction::new(cyclic_group(2), 2, vec![FinMap::identity(2), swap]).unwrap()
    }

    #[test]
    fn functor_shape() {
        let d = GlobalAction::trivial(FiniteMonoid::trivial(), 2).to_datum();
        let f = build_functor_f(&d);
        assert_eq!(f.node_sizes(), &[2, 2]);
        assert_eq!(f.arrows().len(), 2);
        assert!(f.arrows().iter().all(|a| a.map == FinMap::identity(2)));

        let f = build_functor_f(&example(0));
        assert_eq!(f.node_sizes(), &[2, 2, 2, 1, 2, 1]);
        assert_eq!(f.arrows().len(), 8);
    }

    #[test]
    fn indexing_round_trips() {
        let d = example(1);
        let ix = CoproductIndexing::new(&d);
        assert_eq!(ix.total_dom(), 6);
        let mut seen = Vec::new();
        for m in 0..2 {
            for n in 0..2 {
                for j in 0..d.domain(n).len() {
                    let i = ix.flat_dom(m, n, j);
                    assert_eq!(ix.unflat_dom(i), (m, n, j));
                    seen.push(i);
                }
            }
        }
        assert_eq!(seen, (0..6).collect::<Vec<_>>());
        for i in 0..ix.total_x() {
            let (m, x) = ix.unflat_x(i);
            assert_eq!(ix.flat_x(m, x), i);
        }
    }

    #[test]
    fn unflat_skips_empty_blocks() {
        let d = PartialActionDatum::from_lookup(
            FiniteMonoid::idempotent_pair(),
            1,
            &[vec![Some(0)], vec![None]],
        )
        .unwrap();
        let ix = CoproductIndexing::new(&d);
        assert_eq!(ix.total_dom(), 2);
        assert_eq!(ix.unflat_dom(0), (0, 0, 0));
        assert_eq!(ix.unflat_dom(1), (1, 0, 0));
    }

    #[test]
    fn pq_satisfy_their_defining_equations() {
        let d = example(0);
        let pq = build_pq(&d);
        let monoid = d.monoid();
        for m in monoid.elements() {
            for n in monoid.elements() {
                for (j, &x) in d.domain(n).members().iter().enumerate() {
                    let i = pq.indexing.flat_dom(m, n, j);
                    assert_eq!(pq.p.apply(i), pq.indexing.flat_x(monoid.mul(m, n), x));
                    let y = d.apply(n, x).unwrap();
                    assert_eq!(pq.q.apply(i), pq.indexing.flat_x(m, y));
                }
            }
        }
    }

    #[test]
    fn p_and_q_are_morphisms_of_shift_actions() {
        for d in [example(0), example(1), swap_action().to_datum()] {
            let (phi, psi) = coproduct_actions(&d);
            let pq = build_pq(&d);
            assert!(is_equivariant(&pq.p, &phi, &psi));
            assert!(is_equivariant(&pq.q, &phi, &psi));
            assert!(is_datum_morphism(&pq.p, &phi.to_datum(), &psi.to_datum()).unwrap());
        }
    }

    #[test]
    fn psi_for_z2_on_a_point_swaps_blocks() {
        let d = GlobalAction::trivial(cyclic_group(2), 1).to_datum();
        let (_, psi) = coproduct_actions(&d);
        assert_eq!(psi.map(1).images(), &[1, 0]);
    }

    #[test]
    fn coequalizer_class_counts() {
        let pq = build_pq(&example(1));
        assert_eq!(coequalizer(&pq.p, &pq.q).unwrap().size, 2);
        let pq = build_pq(&example(0));
        assert_eq!(coequalizer(&pq.p, &pq.q).unwrap().size, 3);
        let d = GlobalAction::trivial(FiniteMonoid::trivial(), 3).to_datum();
        let pq = build_pq(&d);
        assert_eq!(pq.p, pq.q);
        assert_eq!(coequalizer(&pq.p, &pq.q).unwrap().size, 3);
    }

    #[test]
    fn empty_non_identity_domains() {
        // only (m, e) blocks contribute; they identify (m, x) with itself, so
        // nothing collapses
        let d = PartialActionDatum::from_lookup(
            cyclic_group(3),
            2,
            &[vec![Some(0), Some(1)], vec![None, None], vec![None, None]],
        )
        .unwrap();
        let pq = build_pq(&d);
        assert_eq!(pq.p, pq.q);
        assert_eq!(coequalizer(&pq.p, &pq.q).unwrap().size, 6);
    }

    #[test]
    fn routes_agree_on_examples() {
        for d in [example(0), example(1), swap_action().to_datum()] {
            assert!(compare_routes(&d).unwrap().all_equal());
        }
    }

    #[test]
    fn non_coequalizing_projection_is_rejected() {
        let d = example(0);
        let err = associated_action_from_coequalizer(&d, &FinMap::identity(4)).unwrap_err();
        assert_eq!(err, Error::NotCoequalizing);
    }

    #[test]
    fn h_examples() {
        let g = swap_action();
        let d = GlobalAction::trivial(cyclic_group(2), 2).to_datum();
        let h = h_map(&d, &g, &FinMap::identity(2)).unwrap();
        assert_eq!(h.images(), &[0, 1, 1, 0]);
        assert_eq!(h_inverse(&d, &h).unwrap(), FinMap::identity(2));

        let trivial = GlobalAction::trivial(cyclic_group(2), 2);
        let f = FinMap::new(vec![1, 1], 2).unwrap();
        assert_eq!(h_map(&d, &trivial, &f).unwrap().images(), &[1, 1, 1, 1]);
    }

    #[test]
    fn h_of_reflection_embedding() {
        let d = example(0);
        let g = build_globalization(&d);
        assert_eq!(
            f_coequalizes_iff_datum(&d, g.action(), g.embed()).unwrap(),
            (true, true)
        );
        // x=0 ↦ 1 and x=1 ↦ 2 sends a·0 = 0 to 1 but a·1 = 2 ≠ 1
        let bad = FinMap::new(vec![1, 2], 3).unwrap();
        assert_eq!(
            f_coequalizes_iff_datum(&d, g.action(), &bad).unwrap(),
            (false, false)
        );
    }

    #[test]
    fn shifted_cocones_are_cocones() {
        let d = example(1);
        let colim = colimit_of_diagram(&build_functor_f(&d));
        let diagram = build_functor_f(&d);
        for m in d.monoid().elements() {
            let legs = shift_cocone(&d, &colim.injections, m);
            assert!(is_cocone(&diagram, colim.size, &legs));
        }
    }

    #[test]
    fn theorem_on_examples() {
        let trivial = GlobalAction::trivial(FiniteMonoid::trivial(), 2).to_datum();
        for d in [trivial, example(0), example(1)] {
            let report =
                check_reflection_coequalizer_theorem_with(&d, TheoremConfig::default()).unwrap();
            assert!(report.holds(), "{report:?}");
            assert!(report.targets_checked > 0);
        }
    }

    #[test]
    fn theorem_respects_cap() {
        let cfg = TheoremConfig {
            max_target_size: 2,
            cap: 4,
        };
        assert!(matches!(
            check_reflection_coequalizer_theorem_with(&example(0), cfg),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
