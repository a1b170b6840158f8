//! Finite sets `{0, .., n-1}` and the maps between them: composition,
//! monomorphisms, pullbacks, canonical partial morphisms, and colimits
//! computed as quotients of disjoint unions.
//!
//! Ordering conventions are fixed so every derived structure is reproducible:
//! pullback apexes list pairs in lexicographic order, and quotient classes are
//! numbered by their least member.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// A total map between finite sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    images: Vec<usize>,
    dst_size: usize,
}

impl FinMap {
    pub fn new(images: Vec<usize>, dst_size: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&y| y >= dst_size) {
            return Err(Error::OutOfRange {
                index: bad,
                size: dst_size,
            });
        }
        Ok(Self { images, dst_size })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
            dst_size: n,
        }
    }

    /// The unique map out of the empty set.
    pub fn empty(dst_size: usize) -> Self {
        Self {
            images: Vec::new(),
            dst_size,
        }
    }

    #[inline]
    pub fn src_size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn dst_size(&self) -> usize {
        self.dst_size
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_mono(&self) -> bool {
        let mut seen = vec![false; self.dst_size];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.dst_size];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn image(&self) -> Subset {
        let mut members = self.images.clone();
        members.sort_unstable();
        members.dedup();
        Subset {
            ambient_size: self.dst_size,
            members,
        }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinMap) -> Result<FinMap> {
        compose(self, g)
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    if f.dst_size != g.src_size() {
        return Err(Error::SizeMismatch {
            what: "composite codomain/domain",
            expected: f.dst_size,
            found: g.src_size(),
        });
    }
    Ok(FinMap {
        images: f.images.iter().map(|&y| g.images[y]).collect(),
        dst_size: g.dst_size,
    })
}

pub fn is_mono(f: &FinMap) -> bool {
    f.is_mono()
}

/// Iterator over all `dst^src` maps `src → dst`, in lexicographic order of
/// their image lists.
#[derive(Debug, Clone)]
pub struct AllMaps {
    current: Option<Vec<usize>>,
    dst_size: usize,
}

impl Iterator for AllMaps {
    type Item = FinMap;

    fn next(&mut self) -> Option<FinMap> {
        let images = self.current.take()?;
        let mut succ = images.clone();
        let mut carry = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < self.dst_size {
                carry = false;
                break;
            }
            *slot = 0;
        }
        if !carry {
            self.current = Some(succ);
        }
        Some(FinMap {
            images,
            dst_size: self.dst_size,
        })
    }
}

pub fn all_maps(src_size: usize, dst_size: usize) -> AllMaps {
    let current = (src_size == 0 || dst_size > 0).then(|| vec![0; src_size]);
    AllMaps { current, dst_size }
}

/// `base^exp`, saturating.
pub fn count_maps(src_size: usize, dst_size: usize) -> u128 {
    (dst_size as u128).saturating_pow(src_size.min(u32::MAX as usize) as u32)
}

/// A subset of `0..ambient_size`, stored as a strictly increasing member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    ambient_size: usize,
    members: Vec<usize>,
}

impl Subset {
    pub fn new(ambient_size: usize, members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedSubset);
        }
        if let Some(&bad) = members.iter().find(|&&x| x >= ambient_size) {
            return Err(Error::OutOfRange {
                index: bad,
                size: ambient_size,
            });
        }
        Ok(Self {
            ambient_size,
            members,
        })
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient_size: n,
            members: (0..n).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            ambient_size: n,
            members: Vec::new(),
        }
    }

    pub fn from_predicate(n: usize, pred: impl Fn(usize) -> bool) -> Self {
        Self {
            ambient_size: n,
            members: (0..n).filter(|&x| pred(x)).collect(),
        }
    }

    #[inline]
    pub fn ambient_size(&self) -> usize {
        self.ambient_size
    }

    #[inline]
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.ambient_size
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the member list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// The inclusion map `subset → ambient`.
    pub fn inclusion(&self) -> FinMap {
        FinMap {
            images: self.members.clone(),
            dst_size: self.ambient_size,
        }
    }
}

/// The unique representative `(B, inclusion, h)` of an isomorphism class of
/// spans whose first leg is mono. `map` is indexed by position in `domain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalPartialMorphism {
    domain: Subset,
    map: FinMap,
}

impl CanonicalPartialMorphism {
    pub fn new(domain: Subset, map: FinMap) -> Result<Self> {
        if map.src_size() != domain.len() {
            return Err(Error::SizeMismatch {
                what: "partial map length vs domain size",
                expected: domain.len(),
                found: map.src_size(),
            });
        }
        Ok(Self { domain, map })
    }

    /// A total map viewed as a partial morphism with full domain.
    pub fn total(map: FinMap) -> Self {
        Self {
            domain: Subset::full(map.src_size()),
            map,
        }
    }

    /// Builds the canonical form from a lookup table (`None` = undefined).
    pub fn from_lookup(dst_size: usize, lookup: &[Option<usize>]) -> Result<Self> {
        let members: Vec<usize> = (0..lookup.len()).filter(|&x| lookup[x].is_some()).collect();
        let images: Vec<usize> = lookup.iter().flatten().copied().collect();
        Ok(Self {
            domain: Subset {
                ambient_size: lookup.len(),
                members,
            },
            map: FinMap::new(images, dst_size)?,
        })
    }

    #[inline]
    pub fn domain(&self) -> &Subset {
        &self.domain
    }

    #[inline]
    pub fn map(&self) -> &FinMap {
        &self.map
    }

    pub fn src_size(&self) -> usize {
        self.domain.ambient_size
    }

    pub fn dst_size(&self) -> usize {
        self.map.dst_size
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.domain.position(x).map(|i| self.map.images[i])
    }

    pub fn inclusion(&self) -> FinMap {
        self.domain.inclusion()
    }

    /// Pairs `(x, h(x))` for `x` in the domain, ascending in `x`.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        self.domain
            .members
            .iter()
            .copied()
            .zip(self.map.images.iter().copied())
            .collect()
    }

    pub fn to_lookup(&self) -> Vec<Option<usize>> {
        let mut lookup = vec![None; self.src_size()];
        for (x, y) in self.graph() {
            lookup[x] = Some(y);
        }
        lookup
    }
}

/// Reindexes the span `(f, g)` with `f` mono along the image of `f`.
pub fn canonicalize_partial(f: &FinMap, g: &FinMap) -> Result<CanonicalPartialMorphism> {
    if f.src_size() != g.src_size() {
        return Err(Error::SizeMismatch {
            what: "span legs share a source",
            expected: f.src_size(),
            found: g.src_size(),
        });
    }
    if !f.is_mono() {
        return Err(Error::NotMono);
    }
    let domain = f.image();
    let mut images = vec![0; domain.len()];
    for (a, &fa) in f.images.iter().enumerate() {
        images[domain.position(fa).expect("image member")] = g.images[a];
    }
    Ok(CanonicalPartialMorphism {
        domain,
        map: FinMap {
            images,
            dst_size: g.dst_size,
        },
    })
}

/// The pullback of a cospan `A -f-> Z <-g- B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub pairs: Vec<(usize, usize)>,
    pub p1: FinMap,
    pub p2: FinMap,
}

impl Pullback {
    pub fn apex_size(&self) -> usize {
        self.pairs.len()
    }
}

pub fn pullback(f: &FinMap, g: &FinMap) -> Result<Pullback> {
    if f.dst_size != g.dst_size {
        return Err(Error::SizeMismatch {
            what: "cospan codomains",
            expected: f.dst_size,
            found: g.dst_size,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..f.src_size())
        .flat_map(|a| (0..g.src_size()).map(move |b| (a, b)))
        .filter(|&(a, b)| f.images[a] == g.images[b])
        .collect();
    let p1 = FinMap {
        images: pairs.iter().map(|&(a, _)| a).collect(),
        dst_size: f.src_size(),
    };
    let p2 = FinMap {
        images: pairs.iter().map(|&(_, b)| b).collect(),
        dst_size: g.src_size(),
    };
    Ok(Pullback { pairs, p1, p2 })
}

/// Quotient of `0..size` by the equivalence generated by `pairs`.
///
/// Returns the number of classes and the projection; classes are numbered by
/// their least member, ascending.
pub fn quotient_by_pairs(
    size: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> (usize, FinMap) {
    let mut uf = UnionFind::<usize>::new(size);
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let mut class_of_root = vec![usize::MAX; size];
    let mut next = 0;
    let images = (0..size)
        .map(|x| {
            let root = uf.find_mut(x);
            if class_of_root[root] == usize::MAX {
                class_of_root[root] = next;
                next += 1;
            }
            class_of_root[root]
        })
        .collect();
    (
        next,
        FinMap {
            images,
            dst_size: next,
        },
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub map: FinMap,
}

/// A diagram of finite sets of arbitrary finite shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDiagram {
    node_sizes: Vec<usize>,
    arrows: Vec<Arrow>,
}

impl FiniteDiagram {
    pub fn new(node_sizes: Vec<usize>, arrows: Vec<Arrow>) -> Result<Self> {
        for arrow in &arrows {
            for node in [arrow.src, arrow.dst] {
                if node >= node_sizes.len() {
                    return Err(Error::OutOfRange {
                        index: node,
                        size: node_sizes.len(),
                    });
                }
            }
            if arrow.map.src_size() != node_sizes[arrow.src] {
                return Err(Error::SizeMismatch {
                    what: "arrow source size",
                    expected: node_sizes[arrow.src],
                    found: arrow.map.src_size(),
                });
            }
            if arrow.map.dst_size() != node_sizes[arrow.dst] {
                return Err(Error::SizeMismatch {
                    what: "arrow target size",
                    expected: node_sizes[arrow.dst],
                    found: arrow.map.dst_size(),
                });
            }
        }
        Ok(Self { node_sizes, arrows })
    }

    pub fn node_sizes(&self) -> &[usize] {
        &self.node_sizes
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Offsets of each node inside the disjoint union.
    pub fn offsets(&self) -> Vec<usize> {
        self.node_sizes
            .iter()
            .scan(0, |acc, &n| {
                let start = *acc;
                *acc += n;
                Some(start)
            })
            .collect()
    }

    pub fn total_size(&self) -> usize {
        self.node_sizes.iter().sum()
    }
}

/// A cocone: an apex and one leg per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colimit {
    pub size: usize,
    pub injections: Vec<FinMap>,
}

/// Colimit of a finite diagram as the quotient of the disjoint union by
/// `x ~ arrow(x)`.
pub fn colimit_of_diagram(d: &FiniteDiagram) -> Colimit {
    let offsets = d.offsets();
    let pairs = d.arrows.iter().flat_map(|arrow| {
        let (from, to) = (offsets[arrow.src], offsets[arrow.dst]);
        arrow
            .map
            .images
            .iter()
            .enumerate()
            .map(move |(x, &y)| (from + x, to + y))
    });
    let (size, projection) = quotient_by_pairs(d.total_size(), pairs);
    let injections = d
        .node_sizes
        .iter()
        .zip(&offsets)
        .map(|(&n, &off)| FinMap {
            images: projection.images[off..off + n].to_vec(),
            dst_size: size,
        })
        .collect();
    Colimit { size, injections }
}

/// Whether `legs` form a cocone over `d` with apex of size `apex_size`.
pub fn is_cocone(d: &FiniteDiagram, apex_size: usize, legs: &[FinMap]) -> bool {
    legs.len() == d.node_sizes.len()
        && legs
            .iter()
            .zip(&d.node_sizes)
            .all(|(leg, &n)| leg.src_size() == n && leg.dst_size == apex_size)
        && d.arrows.iter().all(|arrow| {
            let via = compose(&arrow.map, &legs[arrow.dst]).expect("sizes checked");
            via == legs[arrow.src]
        })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequalizer {
    pub size: usize,
    pub projection: FinMap,
}

pub fn coequalizer(p: &FinMap, q: &FinMap) -> Result<Coequalizer> {
    if p.src_size() != q.src_size() || p.dst_size != q.dst_size {
        return Err(Error::SizeMismatch {
            what: "parallel pair",
            expected: p.dst_size,
            found: q.dst_size,
        });
    }
    let pairs = p.images.iter().copied().zip(q.images.iter().copied());
    let (size, projection) = quotient_by_pairs(p.dst_size, pairs);
    Ok(Coequalizer { size, projection })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(images: &[usize], dst: usize) -> FinMap {
        FinMap::new(images.to_vec(), dst).unwrap()
    }

    #[test]
    fn composition() {
        let g = map(&[2, 0, 1], 3);
        assert_eq!(compose(&FinMap::identity(3), &g).unwrap(), g);
        let swap = map(&[1, 0], 2);
        assert_eq!(compose(&swap, &swap).unwrap(), FinMap::identity(2));
        let f = map(&[0, 0, 1], 2);
        assert_eq!(compose(&f, &swap).unwrap(), map(&[1, 1, 0], 2));
        assert!(matches!(
            compose(&swap, &g),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn monomorphisms() {
        assert!(FinMap::identity(4).is_mono());
        assert!(!map(&[1, 1, 1], 2).is_mono());
        assert!(map(&[2, 0], 3).is_mono());
        assert!(FinMap::empty(0).is_mono());
    }

    #[test]
    fn pullbacks() {
        let id = FinMap::identity(3);
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.pairs, vec![(0, 0), (1, 1), (2, 2)]);

        let pb = pullback(&FinMap::empty(2), &map(&[0, 1, 1], 2)).unwrap();
        assert_eq!(pb.apex_size(), 0);

        let pb = pullback(&map(&[0, 0], 1), &map(&[0], 1)).unwrap();
        assert_eq!(pb.pairs, vec![(0, 0), (1, 0)]);
        assert_eq!(pb.p1, map(&[0, 1], 2));
        assert_eq!(pb.p2, map(&[0, 0], 1));
    }

    #[test]
    fn canonical_forms() {
        let g = map(&[1, 0, 1], 2);
        let c = canonicalize_partial(&FinMap::identity(3), &g).unwrap();
        assert!(c.domain().is_full());
        assert_eq!(c.map(), &g);

        let c = canonicalize_partial(&FinMap::empty(4), &FinMap::empty(2)).unwrap();
        assert!(c.domain().is_empty());
        assert_eq!(c.src_size(), 4);

        let c = canonicalize_partial(&map(&[2, 0], 3), &map(&[1, 1], 2)).unwrap();
        assert_eq!(c.domain().members(), &[0, 2]);
        assert_eq!(c.map().images(), &[1, 1]);

        assert_eq!(
            canonicalize_partial(&map(&[0, 0], 1), &map(&[0, 0], 1)),
            Err(Error::NotMono)
        );
    }

    #[test]
    fn isomorphic_spans_share_canonical_form() {
        // (B = {0,1}, f = [2,0], g = [1,0]) and the same span with B reordered
        let a = canonicalize_partial(&map(&[2, 0], 3), &map(&[1, 0], 2)).unwrap();
        let b = canonicalize_partial(&map(&[0, 2], 3), &map(&[0, 1], 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.apply(2), Some(1));
        assert_eq!(a.apply(1), None);
    }

    #[test]
    fn all_maps_enumeration() {
        assert_eq!(all_maps(2, 3).count(), 9);
        assert_eq!(all_maps(0, 0).count(), 1);
        assert_eq!(all_maps(2, 0).count(), 0);
        let maps: Vec<_> = all_maps(2, 2).map(|f| f.images().to_vec()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(count_maps(3, 4), 64);
    }

    #[test]
    fn colimits() {
        let single = FiniteDiagram::new(vec![3], vec![]).unwrap();
        let c = colimit_of_diagram(&single);
        assert_eq!(c.size, 3);
        assert_eq!(c.injections, vec![FinMap::identity(3)]);

        let pair = FiniteDiagram::new(
            vec![1, 1],
            vec![Arrow {
                src: 0,
                dst: 1,
                map: map(&[0], 1),
            }],
        )
        .unwrap();
        let c = colimit_of_diagram(&pair);
        assert_eq!(c.size, 1);
        assert!(is_cocone(&pair, c.size, &c.injections));
    }

    #[test]
    fn diagram_validation() {
        let bad = FiniteDiagram::new(
            vec![2, 1],
            vec![Arrow {
                src: 0,
                dst: 1,
                map: map(&[0], 1),
            }],
        );
        assert!(matches!(bad, Err(Error::SizeMismatch { .. })));
        let bad = FiniteDiagram::new(
            vec![1],
            vec![Arrow {
                src: 0,
                dst: 3,
                map: map(&[0], 1),
            }],
        );
        assert!(matches!(bad, Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn coequalizers() {
        let p = map(&[0, 2, 1], 3);
        let c = coequalizer(&p, &p).unwrap();
        assert_eq!(c.size, 3);
        assert_eq!(c.projection, FinMap::identity(3));

        let c = coequalizer(&FinMap::identity(2), &map(&[1, 0], 2)).unwrap();
        assert_eq!(c.size, 1);

        assert!(coequalizer(&map(&[0], 2), &map(&[0], 3)).is_err());
    }

    #[test]
    fn quotient_numbering_is_by_least_member() {
        let (n, c) = quotient_by_pairs(5, [(4, 1), (3, 0)]);
        assert_eq!(n, 3);
        assert_eq!(c.images(), &[0, 1, 2, 0, 1]);
    }
}
