//! Finite monoids stored as validated multiplication tables.
//!
//! Elements are the dense indices `0..size`. The identity is stored
//! explicitly. Products of transformations follow the composition
//! convention `a·b = a ∘ b` (apply `b` first), so that the natural action of
//! a transformation monoid on its carrier satisfies `β_n ∘ β_m = β_{nm}`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::text;

/// Default bound on the size of a transformation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The product `a·b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        cyclic_group(1)
    }

    /// `{e, a}` with `a·a = a`.
    pub fn idempotent_pair() -> Self {
        validate_monoid(&[vec![0, 1], vec![1, 1]], 0).expect("fixture is a monoid")
    }

    /// `{0, .., n-1}` under truncated addition `a·b = min(a + b, n - 1)`.
    pub fn threshold(n: usize) -> Self {
        assert!(n >= 1, "threshold monoid needs at least one element");
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b).min(n - 1)).collect())
            .collect();
        validate_monoid(&rows, 0).expect("fixture is a monoid")
    }

    /// The fixture pool used by the exhaustive suites: trivial, Z₂, the
    /// idempotent pair, Z₃ and the 3-element threshold monoid.
    pub fn fixture_pool() -> Vec<FiniteMonoid> {
        vec![
            Self::trivial(),
            cyclic_group(2),
            Self::idempotent_pair(),
            cyclic_group(3),
            Self::threshold(3),
        ]
    }

    /// Parses the `monoid <size> <identity>` text format.
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = text::content_lines(input);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `monoid` header".into(),
        })?;
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.len() != 3 || words[0] != "monoid" {
            return Err(Error::Parse {
                line: line_no,
                msg: "expected `monoid <size> <identity>`".into(),
            });
        }
        let size = text::parse_index(words[1], line_no)?;
        let identity = text::parse_index(words[2], line_no)?;
        let mut rows = Vec::with_capacity(size);
        for _ in 0..size {
            let (line_no, row) = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: format!("expected {size} table rows"),
            })?;
            rows.push(text::parse_indices(row, line_no)?);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing content after the table".into(),
            });
        }
        validate_monoid(&rows, identity)
    }
}

impl fmt::Display for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "monoid {} {}", self.size, self.identity)?;
        for row in self.table.chunks(self.size) {
            writeln!(f, "{}", text::join(row))?;
        }
        Ok(())
    }
}

/// Validates a square multiplication table against the monoid laws.
pub fn validate_monoid(table: &[Vec<usize>], identity: usize) -> Result<FiniteMonoid> {
    let size = table.len();
    if size == 0 {
        return Err(Error::EmptyMonoid);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != size {
            return Err(Error::NotSquare {
                row,
                len: entries.len(),
                expected: size,
            });
        }
        if let Some(&bad) = entries.iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { index: bad, size });
        }
    }
    if identity >= size {
        return Err(Error::OutOfRange {
            index: identity,
            size,
        });
    }
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    let mul = |a: usize, b: usize| flat[a * size + b];
    if let Some(a) = (0..size).find(|&a| mul(identity, a) != a || mul(a, identity) != a) {
        return Err(Error::BadIdentity { a });
    }
    for a in 0..size {
        for b in 0..size {
            let ab = mul(a, b);
            for c in 0..size {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(FiniteMonoid {
        size,
        table: flat,
        identity,
    })
}

/// `Z_n` under addition.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n >= 1, "cyclic group needs n >= 1");
    FiniteMonoid {
        size: n,
        table: (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect(),
        identity: 0,
    }
}

/// Closes `{id} ∪ generators` under composition and returns the monoid
/// together with the transformation each element stands for.
///
/// Elements are numbered in breadth-first discovery order from the identity.
pub fn transformation_closure(
    carrier_size: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<(FiniteMonoid, Vec<Vec<usize>>)> {
    for g in generators {
        if g.len() != carrier_size {
            return Err(Error::SizeMismatch {
                what: "generator length",
                expected: carrier_size,
                found: g.len(),
            });
        }
        if let Some(&bad) = g.iter().find(|&&v| v >= carrier_size) {
            return Err(Error::OutOfRange {
                index: bad,
                size: carrier_size,
            });
        }
    }
    let identity: Vec<usize> = (0..carrier_size).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        for g in generators {
            let product: Vec<usize> = elements[t].iter().map(|&x| g[x]).collect();
            if !index.contains_key(&product) {
                if elements.len() == cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                index.insert(product.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(product);
            }
        }
    }
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                    index[&ab]
                })
                .collect()
        })
        .collect();
    let monoid = validate_monoid(&rows, 0)?;
    Ok((monoid, elements))
}

/// The transformation monoid generated by `generators` on `0..carrier_size`.
pub fn monoid_from_transformations(
    carrier_size: usize,
    generators: &[Vec<usize>],
) -> Result<FiniteMonoid> {
    transformation_closure(carrier_size, generators, DEFAULT_CLOSURE_CAP).map(|(m, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive law scan, written independently of `validate_monoid`.
    fn satisfies_laws(rows: &[Vec<usize>], e: usize) -> bool {
        let n = rows.len();
        let identity_ok = (0..n).all(|a| rows[e][a] == a && rows[a][e] == a);
        let assoc_ok = (0..n)
            .all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[a][rows[b][c]])));
        identity_ok && assoc_ok
    }

    #[test]
    fn trivial_table() {
        let m = validate_monoid(&[vec![0]], 0).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m, FiniteMonoid::trivial());
    }

    #[test]
    fn idempotent_pair_is_valid() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(satisfies_laws(&rows, 0));
        let m = validate_monoid(&rows, 0).unwrap();
        assert_eq!(m.mul(1, 1), 1);
    }

    #[test]
    fn wrong_identity_is_rejected() {
        let err = validate_monoid(&[vec![0, 1], vec![1, 1]], 1).unwrap_err();
        assert!(matches!(err, Error::BadIdentity { .. }));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // 0 is the identity; 1·1 = 2, 1·2 = 1, 2·1 = 2, 2·2 = 1
        let rows = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 1]];
        assert!(!satisfies_laws(&rows, 0));
        assert!(matches!(
            validate_monoid(&rows, 0),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(validate_monoid(&[], 0), Err(Error::EmptyMonoid));
        assert!(matches!(
            validate_monoid(&[vec![0, 1], vec![1]], 0),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_monoid(&[vec![0, 2], vec![1, 1]], 0),
            Err(Error::OutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            validate_monoid(&[vec![0]], 1),
            Err(Error::OutOfRange { index: 1, .. })
        ));
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(cyclic_group(1).size(), 1);
        let z2 = cyclic_group(2);
        assert_eq!(z2.rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(cyclic_group(3).mul(1, 2), 0);
        for n in 1..6 {
            assert!(cyclic_group(n).is_commutative());
        }
    }

    #[test]
    fn closure_of_constant_map() {
        let (m, elems) = transformation_closure(2, &[vec![0, 0]], 64).unwrap();
        assert_eq!(elems, vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(m.rows(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn closure_of_three_cycle_is_z3() {
        let m = monoid_from_transformations(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(m, cyclic_group(3));
    }

    #[test]
    fn closure_without_generators() {
        assert_eq!(
            monoid_from_transformations(1, &[]).unwrap(),
            FiniteMonoid::trivial()
        );
        assert_eq!(
            monoid_from_transformations(0, &[]).unwrap(),
            FiniteMonoid::trivial()
        );
    }

    #[test]
    fn closure_respects_cap() {
        // the full symmetric group on 4 points has 24 elements
        let gens = [vec![1, 0, 2, 3], vec![1, 2, 3, 0]];
        assert_eq!(
            transformation_closure(4, &gens, 10).unwrap_err(),
            Error::ClosureTooLarge { cap: 10 }
        );
        assert_eq!(transformation_closure(4, &gens, 64).unwrap().0.size(), 24);
    }

    #[test]
    fn text_round_trip() {
        let src = "# idempotent\nmonoid 2 0\n0 1 # row e\n1 1\n";
        let m = FiniteMonoid::parse(src).unwrap();
        assert_eq!(m, FiniteMonoid::idempotent_pair());
        assert_eq!(FiniteMonoid::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            FiniteMonoid::parse("monoid 2 0\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            FiniteMonoid::parse("group 1 0\n0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            FiniteMonoid::parse("monoid 1 0\nx\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn laws_scan_agrees_with_validator_on_all_two_element_tables() {
        for code in 0..16usize {
            let rows = vec![
                vec![code & 1, (code >> 1) & 1],
                vec![(code >> 2) & 1, (code >> 3) & 1],
            ];
            for e in 0..2 {
                assert_eq!(
                    validate_monoid(&rows, e).is_ok(),
                    satisfies_laws(&rows, e),
                    "{rows:?} e={e}"
                );
            }
        }
    }
}
