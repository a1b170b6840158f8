//! Partial action data of a finite monoid on a finite set, the axioms they
//! may satisfy, datum morphisms, and restriction of global actions.
//!
//! Every `dom α_m` is stored in canonical form (a sorted subset plus a map
//! indexed by position), so two data describing the same spans compare equal
//! structurally.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{
    all_maps, canonicalize_partial, compose, count_maps, pullback, CanonicalPartialMorphism,
    FinMap, Pullback, Subset,
};
use crate::monoid::FiniteMonoid;
use crate::text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialActionDatum {
    monoid: FiniteMonoid,
    carrier_size: usize,
    parts: Vec<CanonicalPartialMorphism>,
    // lookup[m * carrier_size + x] = α_m(x)
    lookup: Vec<Option<usize>>,
}

impl PartialActionDatum {
    pub fn new(
        monoid: FiniteMonoid,
        carrier_size: usize,
        parts: Vec<CanonicalPartialMorphism>,
    ) -> Result<Self> {
        if parts.len() != monoid.size() {
            return Err(Error::SizeMismatch {
                what: "one partial map per monoid element",
                expected: monoid.size(),
                found: parts.len(),
            });
        }
        for part in &parts {
            for found in [part.src_size(), part.dst_size()] {
                if found != carrier_size {
                    return Err(Error::SizeMismatch {
                        what: "partial map source/target vs carrier",
                        expected: carrier_size,
                        found,
                    });
                }
            }
        }
        let lookup = parts.iter().flat_map(|p| p.to_lookup()).collect();
        Ok(Self {
            monoid,
            carrier_size,
            parts,
            lookup,
        })
    }

    /// Builds a datum from per-element lookup tables (`None` = undefined).
    pub fn from_lookup(
        monoid: FiniteMonoid,
        carrier_size: usize,
        tables: &[Vec<Option<usize>>],
    ) -> Result<Self> {
        let parts = tables
            .iter()
            .map(|t| {
                if t.len() != carrier_size {
                    return Err(Error::SizeMismatch {
                        what: "lookup table length vs carrier",
                        expected: carrier_size,
                        found: t.len(),
                    });
                }
                CanonicalPartialMorphism::from_lookup(carrier_size, t)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(monoid, carrier_size, parts)
    }

    #[inline]
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn parts(&self) -> &[CanonicalPartialMorphism] {
        &self.parts
    }

    pub fn part(&self, m: usize) -> &CanonicalPartialMorphism {
        &self.parts[m]
    }

    /// `dom α_m`.
    pub fn domain(&self, m: usize) -> &Subset {
        self.parts[m].domain()
    }

    /// `α_m(x)`, or `None` outside `dom α_m`.
    #[inline]
    pub fn apply(&self, m: usize, x: usize) -> Option<usize> {
        self.lookup[m * self.carrier_size + x]
    }

    /// `ι_m : dom α_m → X`.
    pub fn inclusion(&self, m: usize) -> FinMap {
        self.parts[m].inclusion()
    }

    /// `α_m : dom α_m → X`.
    pub fn map(&self, m: usize) -> &FinMap {
        self.parts[m].map()
    }

    /// The canonical pullback `α_m^{-1}(dom α_n)` of `α_m` and `ι_n`, with legs
    /// into `dom α_m` and `dom α_n` (positions).
    pub fn inverse_image(&self, m: usize, n: usize) -> Pullback {
        pullback(self.map(m), &self.inclusion(n)).expect("both legs land in X")
    }

    /// The canonical pullback `dom α_m ∩ dom α_n` of `ι_m` and `ι_n`.
    pub fn intersection(&self, m: usize, n: usize) -> Pullback {
        pullback(&self.inclusion(m), &self.inclusion(n)).expect("both legs land in X")
    }

    pub fn has_full_domains(&self) -> bool {
        self.parts.iter().all(|p| p.domain().is_full())
    }

    /// Parses the `paction <carrier_size> <monoid-path>` format; `load_monoid`
    /// resolves the path named in the header.
    pub fn parse(
        input: &str,
        load_monoid: impl FnOnce(&str) -> Result<FiniteMonoid>,
    ) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (carrier_size, monoid) = parse_header(&mut lines, "paction", load_monoid)?;
        let rows = parse_element_lines(lines, monoid.size(), |rest, line_no| {
            let mut table = vec![None; carrier_size];
            for pair in rest.split_whitespace() {
                let (x, y) = pair.split_once('>').ok_or_else(|| Error::Parse {
                    line: line_no,
                    msg: format!("expected `x>y`, found `{pair}`"),
                })?;
                let x = text::parse_index(x, line_no)?;
                let y = text::parse_index(y, line_no)?;
                if x >= carrier_size || y >= carrier_size {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("point out of range in `{pair}`"),
                    });
                }
                if table[x].replace(y).is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("point {x} listed twice"),
                    });
                }
            }
            Ok(table)
        })?;
        Self::from_lookup(monoid, carrier_size, &rows)
    }

    /// Renders the datum in the `paction` text format.
    pub fn to_text(&self, monoid_path: &str) -> String {
        let mut out = format!("paction {} {}\n", self.carrier_size, monoid_path);
        for (m, part) in self.parts.iter().enumerate() {
            let pairs: Vec<String> = part
                .graph()
                .iter()
                .map(|(x, y)| format!("{x}>{y}"))
                .collect();
            out.push_str(&text::labelled_line(m, &pairs.join(" ")));
        }
        out
    }
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    load_monoid: impl FnOnce(&str) -> Result<FiniteMonoid>,
) -> Result<(usize, FiniteMonoid)> {
    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: format!("missing `{keyword}` header"),
    })?;
    let mut words = header.splitn(3, char::is_whitespace);
    let bad = || Error::Parse {
        line: line_no,
        msg: format!("expected `{keyword} <carrier_size> <monoid-file>`"),
    };
    if words.next() != Some(keyword) {
        return Err(bad());
    }
    let size = text::parse_index(words.next().ok_or_else(bad)?, line_no)?;
    let path = words.next().map(str::trim).filter(|p| !p.is_empty());
    Ok((size, load_monoid(path.ok_or_else(bad)?)?))
}

fn parse_element_lines<'a, T>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    monoid_size: usize,
    mut parse_row: impl FnMut(&str, usize) -> Result<T>,
) -> Result<Vec<T>> {
    let mut rows: Vec<Option<T>> = (0..monoid_size).map(|_| None).collect();
    for (line_no, line) in lines {
        let (m, rest) = text::split_labelled(line, line_no)?;
        if m >= monoid_size {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("monoid element {m} out of range"),
            });
        }
        if rows[m].replace(parse_row(rest, line_no)?).is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("element {m} listed twice"),
            });
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(m, row)| {
            row.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing line for monoid element {m}"),
            })
        })
        .collect()
}

/// A classical action: one total endomap per monoid element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalAction {
    monoid: FiniteMonoid,
    carrier_size: usize,
    maps: Vec<FinMap>,
}

impl GlobalAction {
    /// Validates `β_e = id` and `β_n ∘ β_m = β_{nm}`.
    pub fn new(monoid: FiniteMonoid, carrier_size: usize, maps: Vec<FinMap>) -> Result<Self> {
        if maps.len() != monoid.size() {
            return Err(Error::SizeMismatch {
                what: "one map per monoid element",
                expected: monoid.size(),
                found: maps.len(),
            });
        }
        for f in &maps {
            for found in [f.src_size(), f.dst_size()] {
                if found != carrier_size {
                    return Err(Error::SizeMismatch {
                        what: "action map vs carrier",
                        expected: carrier_size,
                        found,
                    });
                }
            }
        }
        let e = monoid.identity();
        if maps[e] != FinMap::identity(carrier_size) {
            return Err(Error::NotGlobal {
                axiom: "CGA1",
                m: e,
                n: e,
            });
        }
        for m in monoid.elements() {
            for n in monoid.elements() {
                let composite = compose(&maps[m], &maps[n]).expect("endomaps");
                if composite != maps[monoid.mul(n, m)] {
                    return Err(Error::NotGlobal {
                        axiom: "CGA2",
                        m,
                        n,
                    });
                }
            }
        }
        Ok(Self {
            monoid,
            carrier_size,
            maps,
        })
    }

    /// Every element acts as the identity.
    pub fn trivial(monoid: FiniteMonoid, carrier_size: usize) -> Self {
        let maps = vec![FinMap::identity(carrier_size); monoid.size()];
        Self {
            monoid,
            carrier_size,
            maps,
        }
    }

    #[inline]
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    #[inline]
    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    #[inline]
    pub fn act(&self, m: usize, y: usize) -> usize {
        self.maps[m].apply(y)
    }

    pub fn map(&self, m: usize) -> &FinMap {
        &self.maps[m]
    }

    pub fn maps(&self) -> &[FinMap] {
        &self.maps
    }

    /// The action viewed as a datum with full domains.
    pub fn to_datum(&self) -> PartialActionDatum {
        let parts = self
            .maps
            .iter()
            .cloned()
            .map(CanonicalPartialMorphism::total)
            .collect();
        PartialActionDatum::new(self.monoid.clone(), self.carrier_size, parts)
            .expect("sizes already validated")
    }

    /// Parses the `gaction <carrier_size> <monoid-path>` format.
    pub fn parse(
        input: &str,
        load_monoid: impl FnOnce(&str) -> Result<FiniteMonoid>,
    ) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (carrier_size, monoid) = parse_header(&mut lines, "gaction", load_monoid)?;
        let maps = parse_element_lines(lines, monoid.size(), |rest, line_no| {
            let images = text::parse_indices(rest, line_no)?;
            if images.len() != carrier_size {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {carrier_size} images, found {}", images.len()),
                });
            }
            FinMap::new(images, carrier_size).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })
        })?;
        Self::new(monoid, carrier_size, maps)
    }

    pub fn to_text(&self, monoid_path: &str) -> String {
        let mut out = format!("gaction {} {}\n", self.carrier_size, monoid_path);
        out.push_str(&self.table_lines());
        out
    }

    /// The `m: y0 y1 ...` lines of the action table.
    pub fn table_lines(&self) -> String {
        self.maps
            .iter()
            .enumerate()
            .map(|(m, f)| text::labelled_line(m, &text::join(f.images())))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `dom α_e = X` and `α_e = id`.
    Pa1,
    /// `α_m^{-1}(dom α_n) ⊆ dom α_{nm}`.
    Pa2,
    /// `α_n ∘ α_m = α_{nm}` on `α_m^{-1}(dom α_n)`.
    Pa3,
    /// `α_m^{-1}(dom α_n) = dom α_{nm} ∩ dom α_m`.
    Pa2Strong,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Pa1 => "PA1",
            Axiom::Pa2 => "PA2",
            Axiom::Pa3 => "PA3",
            Axiom::Pa2Strong => "PA2'",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub m: usize,
    pub n: usize,
    pub x: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} n={} x={}", self.axiom, self.m, self.n, self.x)
    }
}

/// Which axioms a datum satisfies, with the first witness per failing axiom
/// in lexicographic `(m, n, x)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub is_datum: bool,
    pub is_partial: bool,
    pub is_strong: bool,
    pub is_global: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

fn axiom_report(d: &PartialActionDatum) -> AxiomReport {
    let monoid = d.monoid();
    let e = monoid.identity();
    let mut violations = Vec::new();

    if let Some(x) = (0..d.carrier_size()).find(|&x| d.apply(e, x) != Some(x)) {
        violations.push(Violation {
            axiom: Axiom::Pa1,
            m: e,
            n: e,
            x,
        });
    }

    let mut pa2 = None;
    let mut pa3 = None;
    let mut strong = None;
    for m in monoid.elements() {
        for n in monoid.elements() {
            let nm = monoid.mul(n, m);
            for &x in d.domain(m).members() {
                let y = d.apply(m, x).expect("x in dom α_m");
                let composite = d.apply(n, y);
                let direct = d.apply(nm, x);
                let witness = Violation {
                    axiom: Axiom::Pa2,
                    m,
                    n,
                    x,
                };
                match (composite, direct) {
                    (Some(_), None) => {
                        pa2.get_or_insert(witness);
                    }
                    (Some(a), Some(b)) if a != b => {
                        pa3.get_or_insert(Violation {
                            axiom: Axiom::Pa3,
                            ..witness
                        });
                    }
                    (None, Some(_)) => {
                        strong.get_or_insert(Violation {
                            axiom: Axiom::Pa2Strong,
                            ..witness
                        });
                    }
                    _ => {}
                }
            }
        }
    }
    violations.extend(pa2);
    violations.extend(pa3);
    let is_partial = violations.is_empty();
    violations.extend(strong);
    let is_strong = is_partial && strong.is_none();
    AxiomReport {
        is_datum: true,
        is_partial,
        is_strong,
        is_global: is_partial && d.has_full_domains(),
        violations,
    }
}

/// Checks PA1–PA3 (and records PA2' for reference).
pub fn check_partial(d: &PartialActionDatum) -> AxiomReport {
    axiom_report(d)
}

/// Checks strongness of a partial action.
pub fn check_strong(d: &PartialActionDatum) -> Result<AxiomReport> {
    let report = axiom_report(d);
    if !report.is_partial {
        return Err(Error::NotPartial);
    }
    Ok(report)
}

/// CPA1 plus the mediating-morphism form of CPA2, decided by exhaustive search
/// for `φ : α_m^{-1}(dom α_n) → dom α_{nm}` over all maps.
pub fn check_partial_categorical(d: &PartialActionDatum, cap: u128) -> Result<bool> {
    let monoid = d.monoid();
    let e = monoid.identity();
    if d.part(e) != &CanonicalPartialMorphism::total(FinMap::identity(d.carrier_size())) {
        return Ok(false);
    }
    for m in monoid.elements() {
        for n in monoid.elements() {
            let nm = monoid.mul(n, m);
            let pb = d.inverse_image(m, n);
            let target = d.domain(nm).len();
            let count = count_maps(pb.apex_size(), target);
            if count > cap {
                return Err(Error::EnumerationTooLarge { count, cap });
            }
            let left = compose(&pb.p1, &d.inclusion(m))?;
            let right = compose(&pb.p2, d.map(n))?;
            let inclusion_nm = d.inclusion(nm);
            let found = all_maps(pb.apex_size(), target).any(|phi| {
                compose(&phi, &inclusion_nm).expect("sizes") == left
                    && compose(&phi, d.map(nm)).expect("sizes") == right
            });
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_same_monoid(a: &FiniteMonoid, b: &FiniteMonoid) -> Result<()> {
    if a != b {
        return Err(Error::MonoidMismatch);
    }
    Ok(())
}

/// How a map fails to be a datum morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `x ∈ dom α_m` but `f(x) ∉ dom β_m`.
    Domain { m: usize, x: usize },
    /// `f(α_m(x)) ≠ β_m(f(x))`.
    Commute { m: usize, x: usize },
}

/// The first `(m, x)` at which `f` fails to be a datum morphism.
pub fn datum_morphism_violation(
    f: &FinMap,
    src: &PartialActionDatum,
    dst: &PartialActionDatum,
) -> Result<Option<MorphismViolation>> {
    check_same_monoid(src.monoid(), dst.monoid())?;
    if f.src_size() != src.carrier_size() || f.dst_size() != dst.carrier_size() {
        return Err(Error::SizeMismatch {
            what: "datum morphism carriers",
            expected: src.carrier_size(),
            found: f.src_size(),
        });
    }
    for m in src.monoid().elements() {
        for (x, y) in src.part(m).graph() {
            match dst.apply(m, f.apply(x)) {
                None => return Ok(Some(MorphismViolation::Domain { m, x })),
                Some(z) if z != f.apply(y) => return Ok(Some(MorphismViolation::Commute { m, x })),
                _ => {}
            }
        }
    }
    Ok(None)
}

pub fn is_datum_morphism(
    f: &FinMap,
    src: &PartialActionDatum,
    dst: &PartialActionDatum,
) -> Result<bool> {
    Ok(datum_morphism_violation(f, src, dst)?.is_none())
}

/// Datum morphism test into a global action: `β_m ∘ f ∘ ι_m = f ∘ α_m`.
pub fn is_datum_morphism_to_global(
    f: &FinMap,
    src: &PartialActionDatum,
    dst: &GlobalAction,
) -> Result<bool> {
    check_same_monoid(src.monoid(), dst.monoid())?;
    if f.src_size() != src.carrier_size() || f.dst_size() != dst.carrier_size() {
        return Err(Error::SizeMismatch {
            what: "datum morphism carriers",
            expected: src.carrier_size(),
            found: f.src_size(),
        });
    }
    Ok(src.monoid().elements().all(|m| {
        src.part(m)
            .graph()
            .into_iter()
            .all(|(x, y)| dst.act(m, f.apply(x)) == f.apply(y))
    }))
}

/// Equivariance of a map between global actions: `f ∘ a_m = b_m ∘ f`.
pub fn is_equivariant(f: &FinMap, a: &GlobalAction, b: &GlobalAction) -> bool {
    a.monoid() == b.monoid()
        && f.src_size() == a.carrier_size()
        && f.dst_size() == b.carrier_size()
        && a.monoid()
            .elements()
            .all(|m| (0..a.carrier_size()).all(|y| f.apply(a.act(m, y)) == b.act(m, f.apply(y))))
}

/// Restriction of `g` along the mono `iota`, computed as the pullback of
/// `β_m ∘ ι` and `ι` for every `m`.
pub fn restrict(g: &GlobalAction, iota: &FinMap) -> Result<PartialActionDatum> {
    if iota.dst_size() != g.carrier_size() {
        return Err(Error::SizeMismatch {
            what: "embedding target vs carrier",
            expected: g.carrier_size(),
            found: iota.dst_size(),
        });
    }
    if !iota.is_mono() {
        return Err(Error::NotMono);
    }
    let parts = g
        .maps()
        .iter()
        .map(|beta| {
            let pb = pullback(&compose(iota, beta)?, iota)?;
            canonicalize_partial(&pb.p1, &pb.p2)
        })
        .collect::<Result<Vec<_>>>()?;
    PartialActionDatum::new(g.monoid().clone(), iota.src_size(), parts)
}

/// Every global action of `monoid` on `0..carrier_size`, in lexicographic
/// order of the concatenated action tables.
pub fn enumerate_global_actions(
    monoid: &FiniteMonoid,
    carrier_size: usize,
    cap: u128,
) -> Result<Vec<GlobalAction>> {
    let per_element = count_maps(carrier_size, carrier_size);
    let count = per_element.saturating_pow(monoid.size() as u32 - 1);
    if count > cap {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let e = monoid.identity();
    let others: Vec<usize> = monoid.elements().filter(|&m| m != e).collect();
    let endomaps: Vec<FinMap> = all_maps(carrier_size, carrier_size).collect();
    let mut found = Vec::new();
    let mut choice = vec![0usize; others.len()];
    'outer: loop {
        let mut maps = vec![FinMap::identity(carrier_size); monoid.size()];
        for (slot, &m) in others.iter().enumerate() {
            maps[m] = endomaps[choice[slot]].clone();
        }
        if let Ok(action) = GlobalAction::new(monoid.clone(), carrier_size, maps) {
            found.push(action);
        }
        for slot in (0..choice.len()).rev() {
            choice[slot] += 1;
            if choice[slot] < endomaps.len() {
                continue 'outer;
            }
            choice[slot] = 0;
        }
        break;
    }
    Ok(found)
}

/// An equivariant bijection `a → b`, if one exists.
pub fn actions_isomorphic(a: &GlobalAction, b: &GlobalAction) -> Option<FinMap> {
    if a.monoid() != b.monoid() || a.carrier_size() != b.carrier_size() {
        return None;
    }
    let n = a.carrier_size();
    // Points may only be matched when they are fixed by the same elements
    // and have orbits of equal size.
    let signature = |act: &GlobalAction, y: usize| {
        let fixed: Vec<bool> = act
            .monoid()
            .elements()
            .map(|m| act.act(m, y) == y)
            .collect();
        let mut orbit: Vec<usize> = act.monoid().elements().map(|m| act.act(m, y)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        (fixed, orbit.len())
    };
    let sig_a: Vec<_> = (0..n).map(|y| signature(a, y)).collect();
    let sig_b: Vec<_> = (0..n).map(|z| signature(b, z)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }

    struct Search<'a> {
        a: &'a GlobalAction,
        b: &'a GlobalAction,
        forward: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        /// Assigns `y ↦ z` and everything it forces; returns the assigned points
        /// (for undo) or `None` on conflict, leaving the state rolled back.
        fn assign(&mut self, y: usize, z: usize) -> Option<Vec<usize>> {
            let mut trail = Vec::new();
            let mut stack = vec![(y, z)];
            while let Some((y, z)) = stack.pop() {
                match self.forward[y] {
                    Some(w) if w == z => continue,
                    Some(_) => {
                        self.undo(&trail);
                        return None;
                    }
                    None if self.used[z] => {
                        self.undo(&trail);
                        return None;
                    }
                    None => {
                        self.forward[y] = Some(z);
                        self.used[z] = true;
                        trail.push(y);
                        for m in self.a.monoid().elements() {
                            stack.push((self.a.act(m, y), self.b.act(m, z)));
                        }
                    }
                }
            }
            Some(trail)
        }

        fn undo(&mut self, trail: &[usize]) {
            for &y in trail {
                let z = self.forward[y].take().expect("assigned");
                self.used[z] = false;
            }
        }

        fn solve(&mut self, sig_a: &[(Vec<bool>, usize)], sig_b: &[(Vec<bool>, usize)]) -> bool {
            let Some(y) = self.forward.iter().position(Option::is_none) else {
                return true;
            };
            for z in 0..self.used.len() {
                if self.used[z] || sig_a[y] != sig_b[z] {
                    continue;
                }
                if let Some(trail) = self.assign(y, z) {
                    if self.solve(sig_a, sig_b) {
                        return true;
                    }
                    self.undo(&trail);
                }
            }
            false
        }
    }

    let mut search = Search {
        a,
        b,
        forward: vec![None; n],
        used: vec![false; n],
    };
    if !search.solve(&sig_a, &sig_b) {
        return None;
    }
    let images = search
        .forward
        .into_iter()
        .map(|z| z.expect("total"))
        .collect();
    FinMap::new(images, n).ok()
}
