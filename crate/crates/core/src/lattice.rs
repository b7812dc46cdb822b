//! The quotient lattice of directed-family classes over a finite space.
//!
//! Elements are the closed sets of the space, each standing for the class
//! whose normal form it is. The order, join and meet tables are computed
//! through the family calculus on single-member generators; the `brute_*`
//! routines recompute bounds by scanning the order matrix and serve as
//! oracles for the tables and for `sup_many`/`inf_many`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::{DirectedFamily, LatticeElement};
use crate::limits::{Limits, MAX_LATTICE_ELEMENTS};
use crate::mask::SubsetMask;
use crate::space::FiniteSpace;

#[derive(Debug, Clone)]
pub struct UniformLattice<'s> {
    space: &'s FiniteSpace,
    /// Closed sets sorted by size, then by mask value.
    elements: Vec<SubsetMask>,
    /// Indexed by mask bits; `usize::MAX` for non-closed sets.
    index: Vec<usize>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Lattice laws checked by [`UniformLattice::violated_laws`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LatticeLaw {
    PartialOrder,
    JoinIsLeastUpperBound,
    MeetIsGreatestLowerBound,
    Commutativity,
    Associativity,
    Idempotence,
    Absorption,
    Bounded,
    Distributivity,
}

impl LatticeLaw {
    pub const ALL: [LatticeLaw; 9] = [
        LatticeLaw::PartialOrder,
        LatticeLaw::JoinIsLeastUpperBound,
        LatticeLaw::MeetIsGreatestLowerBound,
        LatticeLaw::Commutativity,
        LatticeLaw::Associativity,
        LatticeLaw::Idempotence,
        LatticeLaw::Absorption,
        LatticeLaw::Bounded,
        LatticeLaw::Distributivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeLaw::PartialOrder => "partial-order",
            LatticeLaw::JoinIsLeastUpperBound => "join-is-lub",
            LatticeLaw::MeetIsGreatestLowerBound => "meet-is-glb",
            LatticeLaw::Commutativity => "commutativity",
            LatticeLaw::Associativity => "associativity",
            LatticeLaw::Idempotence => "idempotence",
            LatticeLaw::Absorption => "absorption",
            LatticeLaw::Bounded => "bounded",
            LatticeLaw::Distributivity => "distributivity",
        }
    }
}

/// Places where a lattice over a non-discrete space departs from what the
/// discrete case predicts. Data, not failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisNote {
    /// Atoms are not exactly the point classes `C_{x}`.
    AtomsNotPointClasses { atoms: usize, points: usize },
    /// `c = π = |X|` fails.
    CardinalFunctionsDiffer {
        cellularity: usize,
        pi_density: usize,
        points: usize,
    },
    /// Some element has no complement.
    NotBoolean,
}

impl<'s> UniformLattice<'s> {
    pub fn build(space: &'s FiniteSpace, limits: &Limits) -> Result<Self> {
        let n = space.n();
        if n > limits.max_lattice_points {
            return Err(Error::SpaceTooLarge {
                points: n,
                limit: limits.max_lattice_points,
            });
        }
        let elements = space.closed_sets();
        let k = elements.len();
        let mut index = vec![usize::MAX; 1usize << n];
        for (i, e) in elements.iter().enumerate() {
            index[e.bits() as usize] = i;
        }
        let generators: Vec<DirectedFamily<'s>> = elements
            .iter()
            .map(|&e| LatticeElement::of_closed(space, e).map(|el| el.generator()))
            .collect::<Result<_>>()?;

        let mut leq = vec![false; k * k];
        let mut join = vec![0; k * k];
        let mut meet = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (&generators[i], &generators[j]);
                leq[i * k + j] = a.leq(b)?;
                join[i * k + j] = index[a.join(b)?.normal_form().canon().bits() as usize];
                meet[i * k + j] = index[a.meet(b)?.normal_form().canon().bits() as usize];
            }
        }
        Ok(UniformLattice {
            space,
            bottom: index[0],
            top: index[space.full().bits() as usize],
            elements,
            index,
            leq,
            join,
            meet,
        })
    }

    pub fn space(&self) -> &'s FiniteSpace {
        self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Canonical closed sets, in index order.
    pub fn elements(&self) -> &[SubsetMask] {
        &self.elements
    }

    pub fn canon(&self, i: usize) -> SubsetMask {
        self.elements[i]
    }

    pub fn element(&self, i: usize) -> LatticeElement<'s> {
        LatticeElement::of_closed(self.space, self.elements[i]).expect("elements are closed")
    }

    /// Index of the class `C_A` for an arbitrary subset `A`.
    pub fn class_of_set(&self, a: SubsetMask) -> usize {
        self.index[self.space.closure(a).bits() as usize]
    }

    /// Index of a family's class.
    pub fn class_of(&self, family: &DirectedFamily<'_>) -> Result<usize> {
        if family.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.index[family.normal_form().canon().bits() as usize])
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    fn check_indices(&self, subset: &[usize]) -> Result<()> {
        match subset.iter().find(|&&i| i >= self.len()) {
            Some(&i) => Err(Error::ElementOutOfRange(i)),
            None => Ok(()),
        }
    }

    /// Least upper bound of `subset`, found by scanning the order matrix.
    pub fn brute_sup(&self, subset: &[usize]) -> Result<usize> {
        self.check_indices(subset)?;
        let k = self.len();
        let uppers: Vec<usize> = (0..k)
            .filter(|&u| subset.iter().all(|&s| self.leq(s, u)))
            .collect();
        let least: Vec<usize> = uppers
            .iter()
            .copied()
            .filter(|&u| uppers.iter().all(|&v| self.leq(u, v)))
            .collect();
        match least.as_slice() {
            [only] => Ok(*only),
            _ => Err(Error::NoBound),
        }
    }

    /// Greatest lower bound of `subset`, found by scanning the order matrix.
    pub fn brute_inf(&self, subset: &[usize]) -> Result<usize> {
        self.check_indices(subset)?;
        let k = self.len();
        let lowers: Vec<usize> = (0..k)
            .filter(|&l| subset.iter().all(|&s| self.leq(l, s)))
            .collect();
        let greatest: Vec<usize> = lowers
            .iter()
            .copied()
            .filter(|&l| lowers.iter().all(|&v| self.leq(v, l)))
            .collect();
        match greatest.as_slice() {
            [only] => Ok(*only),
            _ => Err(Error::NoBound),
        }
    }

    /// Minimal elements strictly above the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        let b = self.bottom;
        (0..self.len())
            .filter(|&i| i != b)
            .filter(|&i| (0..self.len()).all(|j| j == b || j == i || !self.leq(j, i)))
            .collect()
    }

    /// Unordered complement pairs `(i, j)` with `i <= j`.
    pub fn complemented_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i..k {
                if self.meet(i, j) == self.bottom && self.join(i, j) == self.top {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    /// Elements that have a complement, ascending.
    pub fn complemented_elements(&self) -> Vec<usize> {
        let mut has = vec![false; self.len()];
        for (i, j) in self.complemented_pairs() {
            has[i] = true;
            has[j] = true;
        }
        (0..self.len()).filter(|&i| has[i]).collect()
    }

    /// Elements whose canonical closed set is also open.
    pub fn clopen_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.space.is_open(self.elements[i]))
            .collect()
    }

    pub fn is_boolean(&self) -> bool {
        self.complemented_elements().len() == self.len()
    }

    fn positive_count_guard(&self) -> Result<()> {
        let size = self.len() as u128;
        if self.len() > MAX_LATTICE_ELEMENTS {
            return Err(Error::SearchSpaceTooLarge {
                what: "lattice elements",
                size,
                limit: MAX_LATTICE_ELEMENTS as u128,
            });
        }
        Ok(())
    }

    /// Elements other than the bottom, ascending.
    pub fn positive(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| i != self.bottom).collect()
    }

    /// Largest set of non-bottom elements whose pairwise meets are the
    /// bottom. Exact branch-and-bound.
    pub fn cellularity(&self) -> Result<usize> {
        self.positive_count_guard()?;
        let pos = self.positive();
        let disjoint: Vec<u64> = pos
            .iter()
            .map(|&i| {
                pos.iter()
                    .enumerate()
                    .filter(|&(_, &j)| j != i && self.meet(i, j) == self.bottom)
                    .fold(0u64, |acc, (b, _)| acc | 1 << b)
            })
            .collect();
        let all = if pos.len() == 64 {
            u64::MAX
        } else {
            (1u64 << pos.len()) - 1
        };
        let mut best = 0;
        max_clique(&disjoint, 0, all, &mut best);
        Ok(best)
    }

    /// Smallest set `S` of non-bottom elements such that every non-bottom
    /// element lies above some member of `S`. Exact branch-and-bound.
    pub fn pi_density(&self) -> Result<usize> {
        self.positive_count_guard()?;
        let pos = self.positive();
        // below[s] = positions of elements under pos[s]
        let below: Vec<u64> = pos
            .iter()
            .map(|&s| {
                pos.iter()
                    .enumerate()
                    .filter(|&(_, &t)| self.leq(t, s))
                    .fold(0u64, |acc, (b, _)| acc | 1 << b)
            })
            .collect();
        let mut best = pos.len();
        min_cover(&below, 0, 0, &mut best);
        Ok(best)
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let covered = (0..k)
                    .any(|m| m != i && m != j && self.leq(i, m) && self.leq(m, j));
                if !covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Laws that the stored order and tables fail to satisfy.
    pub fn violated_laws(&self) -> Vec<LatticeLaw> {
        let k = self.len();
        let r = 0..k;
        let all2 = |f: &dyn Fn(usize, usize) -> bool| r.clone().all(|i| r.clone().all(|j| f(i, j)));
        let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
            r.clone()
                .all(|i| r.clone().all(|j| r.clone().all(|l| f(i, j, l))))
        };
        let (leq, join, meet) = (
            |i, j| self.leq(i, j),
            |i, j| self.join(i, j),
            |i, j| self.meet(i, j),
        );
        let mut violated = Vec::new();
        let mut law = |law: LatticeLaw, holds: bool| {
            if !holds {
                violated.push(law);
            }
        };
        law(
            LatticeLaw::PartialOrder,
            r.clone().all(|i| leq(i, i))
                && all2(&|i, j| !(leq(i, j) && leq(j, i)) || i == j)
                && all3(&|i, j, l| !(leq(i, j) && leq(j, l)) || leq(i, l)),
        );
        law(
            LatticeLaw::JoinIsLeastUpperBound,
            all2(&|i, j| leq(i, join(i, j)) && leq(j, join(i, j)))
                && all3(&|i, j, u| !(leq(i, u) && leq(j, u)) || leq(join(i, j), u)),
        );
        law(
            LatticeLaw::MeetIsGreatestLowerBound,
            all2(&|i, j| leq(meet(i, j), i) && leq(meet(i, j), j))
                && all3(&|i, j, l| !(leq(l, i) && leq(l, j)) || leq(l, meet(i, j))),
        );
        law(
            LatticeLaw::Commutativity,
            all2(&|i, j| join(i, j) == join(j, i) && meet(i, j) == meet(j, i)),
        );
        law(
            LatticeLaw::Associativity,
            all3(&|i, j, l| {
                join(join(i, j), l) == join(i, join(j, l))
                    && meet(meet(i, j), l) == meet(i, meet(j, l))
            }),
        );
        law(
            LatticeLaw::Idempotence,
            r.clone().all(|i| join(i, i) == i && meet(i, i) == i),
        );
        law(
            LatticeLaw::Absorption,
            all2(&|i, j| join(i, meet(i, j)) == i && meet(i, join(i, j)) == i),
        );
        law(
            LatticeLaw::Bounded,
            r.clone()
                .all(|i| leq(self.bottom, i) && leq(i, self.top))
                && self.elements[self.bottom].is_empty()
                && self.elements[self.top] == self.space.full(),
        );
        law(
            LatticeLaw::Distributivity,
            all3(&|i, j, l| {
                meet(i, join(j, l)) == join(meet(i, j), meet(i, l))
                    && join(i, meet(j, l)) == meet(join(i, j), join(i, l))
            }),
        );
        violated
    }

    /// Departures from what a discrete space of the same size would give.
    pub fn hypothesis_notes(&self) -> Result<Vec<HypothesisNote>> {
        let n = self.space.n();
        let mut notes = Vec::new();
        let atoms = self.atoms();
        let point_classes: Vec<usize> = {
            let mut v: Vec<usize> = (0..n)
                .map(|x| self.class_of_set(SubsetMask::singleton(x)))
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        if atoms != point_classes || atoms.len() != n {
            notes.push(HypothesisNote::AtomsNotPointClasses {
                atoms: atoms.len(),
                points: n,
            });
        }
        let (c, pi) = (self.cellularity()?, self.pi_density()?);
        if c != n || pi != n {
            notes.push(HypothesisNote::CardinalFunctionsDiffer {
                cellularity: c,
                pi_density: pi,
                points: n,
            });
        }
        if !self.is_boolean() {
            notes.push(HypothesisNote::NotBoolean);
        }
        Ok(notes)
    }

    /// Overwrites one meet entry so that the table stops being a lattice
    /// operation. Returns false when the lattice has fewer than three
    /// elements and nothing was changed.
    #[doc(hidden)]
    pub fn corrupt_meet_table(&mut self) -> bool {
        let Some(i) = (0..self.len()).find(|&i| i != self.bottom && i != self.top) else {
            return false;
        };
        let k = self.len();
        self.meet[i * k + self.top] = self.bottom;
        self.meet[self.top * k + i] = self.bottom;
        true
    }
}

fn max_clique(adjacent: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        max_clique(adjacent, size + 1, rest & adjacent[v], best);
    }
    *best = (*best).max(size);
}

/// Hitting-set search: every position `s` must be covered by a chosen
/// position in `below[s]`.
fn min_cover(below: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let uncovered = below
        .iter()
        .enumerate()
        .filter(|(_, b)| **b & chosen == 0)
        .min_by_key(|(_, b)| b.count_ones());
    let Some((_, &options)) = uncovered else {
        *best = size;
        return;
    };
    let mut rest = options;
    while rest != 0 {
        let t = rest.trailing_zeros();
        rest &= rest - 1;
        min_cover(below, chosen | 1 << t, size + 1, best);
    }
}

/// Order-isomorphisms `a → b` as index tables, in lexicographic order.
pub fn iso_search(
    a: &UniformLattice<'_>,
    b: &UniformLattice<'_>,
    limits: &Limits,
) -> Result<Vec<Vec<usize>>> {
    let mut found = Vec::new();
    search_isomorphisms(a, b, limits.max_isomorphisms, &mut found)?;
    Ok(found)
}

/// First order-isomorphism `a → b`, if any.
pub fn first_isomorphism(a: &UniformLattice<'_>, b: &UniformLattice<'_>) -> Option<Vec<usize>> {
    let mut found = Vec::new();
    let _ = search_isomorphisms(a, b, 1, &mut found);
    found.pop()
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct NodeSignature {
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(l: &UniformLattice<'_>) -> Vec<NodeSignature> {
    let k = l.len();
    let hasse = l.hasse();
    (0..k)
        .map(|i| NodeSignature {
            below: (0..k).filter(|&j| l.leq(j, i)).count(),
            above: (0..k).filter(|&j| l.leq(i, j)).count(),
            lower_covers: hasse.iter().filter(|e| e.1 == i).count(),
            upper_covers: hasse.iter().filter(|e| e.0 == i).count(),
        })
        .collect()
}

/// Stops quietly after `cap` results when `cap == 1`; otherwise exceeding
/// `cap` is an error.
fn search_isomorphisms(
    a: &UniformLattice<'_>,
    b: &UniformLattice<'_>,
    cap: usize,
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if a.len() != b.len() {
        return Ok(());
    }
    let k = a.len();
    let (sa, sb) = (signatures(a), signatures(b));
    let mut table = vec![usize::MAX; k];
    let mut used = vec![false; k];

    struct Search<'x, 'a, 'b> {
        a: &'x UniformLattice<'a>,
        b: &'x UniformLattice<'b>,
        sa: &'x [NodeSignature],
        sb: &'x [NodeSignature],
        cap: usize,
    }

    impl Search<'_, '_, '_> {
        fn extend(
            &self,
            i: usize,
            table: &mut [usize],
            used: &mut [bool],
            found: &mut Vec<Vec<usize>>,
        ) -> Result<bool> {
            if i == table.len() {
                if found.len() == self.cap {
                    return Err(Error::SearchSpaceTooLarge {
                        what: "isomorphisms",
                        size: self.cap as u128 + 1,
                        limit: self.cap as u128,
                    });
                }
                found.push(table.to_vec());
                return Ok(self.cap == 1);
            }
            for j in 0..table.len() {
                if used[j] || self.sa[i] != self.sb[j] {
                    continue;
                }
                let consistent = (0..i).all(|p| {
                    self.a.leq(p, i) == self.b.leq(table[p], j)
                        && self.a.leq(i, p) == self.b.leq(j, table[p])
                });
                if !consistent {
                    continue;
                }
                used[j] = true;
                table[i] = j;
                let stop = self.extend(i + 1, table, used, found)?;
                used[j] = false;
                table[i] = usize::MAX;
                if stop {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let search = Search {
        a,
        b,
        sa: &sa,
        sb: &sb,
        cap,
    };
    search.extend(0, &mut table, &mut used, found).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::default_label;
    use alloc::string::String;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    fn build(space: &FiniteSpace) -> UniformLattice<'_> {
        UniformLattice::build(space, &Limits::DEFAULT).unwrap()
    }

    #[test]
    fn build_examples() {
        let d3 = FiniteSpace::discrete(3);
        let l = build(&d3);
        assert_eq!(l.len(), 8);
        assert!(l.violated_laws().is_empty());
        assert!((0..8).all(|i| (0..8).all(|j| l.leq(i, j) == l.canon(i).is_subset(l.canon(j)))));

        let s = FiniteSpace::sierpinski();
        let l = build(&s);
        assert_eq!(l.elements(), [m(&[]), m(&[1]), m(&[0, 1])]);
        assert!(l.leq(0, 1) && l.leq(1, 2));

        let i2 = FiniteSpace::indiscrete(2);
        assert_eq!(build(&i2).elements(), [m(&[]), m(&[0, 1])]);

        let big = FiniteSpace::discrete(7);
        assert!(matches!(
            UniformLattice::build(&big, &Limits::DEFAULT),
            Err(Error::SpaceTooLarge { .. })
        ));
    }

    #[test]
    fn brute_bound_examples() {
        let d2 = FiniteSpace::discrete(2);
        let l = build(&d2);
        let (a, b) = (l.class_of_set(m(&[0])), l.class_of_set(m(&[1])));
        assert_eq!(l.canon(l.brute_sup(&[a, b]).unwrap()), m(&[0, 1]));
        assert_eq!(l.brute_inf(&[]).unwrap(), l.top());
        assert_eq!(l.brute_sup(&[]).unwrap(), l.bottom());
        assert_eq!(l.brute_sup(&[9]).unwrap_err(), Error::ElementOutOfRange(9));

        let s = FiniteSpace::sierpinski();
        let l = build(&s);
        assert_eq!(l.brute_sup(&[1, 0]).unwrap(), 1);
    }

    #[test]
    fn atom_examples() {
        let d3 = FiniteSpace::discrete(3);
        let l = build(&d3);
        let atoms: Vec<SubsetMask> = l.atoms().into_iter().map(|i| l.canon(i)).collect();
        assert_eq!(atoms, [m(&[0]), m(&[1]), m(&[2])]);

        let s = FiniteSpace::sierpinski();
        let l = build(&s);
        assert_eq!(l.atoms(), [1]);
        assert_eq!(l.canon(1), m(&[1]));

        let i2 = FiniteSpace::indiscrete(2);
        let l = build(&i2);
        assert_eq!(l.atoms(), [l.top()]);
    }

    #[test]
    fn complement_examples() {
        let d2 = FiniteSpace::discrete(2);
        let l = build(&d2);
        assert!(l.is_boolean());
        assert_eq!(l.complemented_elements(), l.clopen_elements());

        let s = FiniteSpace::sierpinski();
        let l = build(&s);
        assert_eq!(l.complemented_pairs(), [(0, 2)]);
        assert!(!l.is_boolean());
        assert_eq!(l.complemented_elements(), l.clopen_elements());

        let i2 = FiniteSpace::indiscrete(2);
        assert!(build(&i2).is_boolean());
    }

    #[test]
    fn cardinal_examples() {
        let d4 = FiniteSpace::discrete(4);
        let l = build(&d4);
        assert_eq!((l.cellularity().unwrap(), l.pi_density().unwrap()), (4, 4));
        for space in [FiniteSpace::sierpinski(), FiniteSpace::indiscrete(2)] {
            let l = build(&space);
            assert_eq!((l.cellularity().unwrap(), l.pi_density().unwrap()), (1, 1));
        }
        let d0 = FiniteSpace::discrete(0);
        let l = build(&d0);
        assert_eq!((l.cellularity().unwrap(), l.pi_density().unwrap()), (0, 0));
    }

    #[test]
    fn hypothesis_notes() {
        let d3 = FiniteSpace::discrete(3);
        assert!(build(&d3).hypothesis_notes().unwrap().is_empty());
        let s = FiniteSpace::sierpinski();
        let notes = build(&s).hypothesis_notes().unwrap();
        assert!(notes.contains(&HypothesisNote::AtomsNotPointClasses { atoms: 1, points: 2 }));
        assert!(notes.contains(&HypothesisNote::NotBoolean));
    }

    #[test]
    fn iso_examples() {
        let d2 = FiniteSpace::discrete(2);
        let l = build(&d2);
        assert_eq!(iso_search(&l, &l, &Limits::DEFAULT).unwrap().len(), 2);

        let s = FiniteSpace::sierpinski();
        // a 3-chain on differently labelled points: {x} closed, y open
        let labels: Vec<String> = ["y", "x"].iter().map(|s| String::from(*s)).collect();
        let chain = FiniteSpace::new(labels, [m(&[]), m(&[0]), m(&[0, 1])]).unwrap();
        let (ls, lc) = (build(&s), build(&chain));
        assert_eq!(iso_search(&ls, &lc, &Limits::DEFAULT).unwrap(), [vec![0, 1, 2]]);

        let i2 = FiniteSpace::indiscrete(2);
        assert!(iso_search(&build(&i2), &ls, &Limits::DEFAULT).unwrap().is_empty());
        assert!(first_isomorphism(&build(&i2), &ls).is_none());
        let _ = default_label(0);
    }

    #[test]
    fn iso_cap_is_enforced() {
        let d3 = FiniteSpace::discrete(3);
        let l = build(&d3);
        let tight = Limits {
            max_isomorphisms: 5,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            iso_search(&l, &l, &tight),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        assert_eq!(iso_search(&l, &l, &Limits::DEFAULT).unwrap().len(), 6);
    }

    #[test]
    fn hasse_examples() {
        let d2 = FiniteSpace::discrete(2);
        assert_eq!(build(&d2).hasse().len(), 4);
        let s = FiniteSpace::sierpinski();
        assert_eq!(build(&s).hasse(), [(0, 1), (1, 2)]);
        let i2 = FiniteSpace::indiscrete(2);
        assert_eq!(build(&i2).hasse(), [(0, 1)]);
    }

    #[test]
    fn corrupted_meet_breaks_distributivity() {
        let s = FiniteSpace::sierpinski();
        let mut l = build(&s);
        assert!(l.corrupt_meet_table());
        assert!(l.violated_laws().contains(&LatticeLaw::Distributivity));
        let i2 = FiniteSpace::indiscrete(2);
        assert!(!build(&i2).corrupt_meet_table());
    }
}
