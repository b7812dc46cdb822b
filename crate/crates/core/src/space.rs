//! Finite topological spaces.
//!
//! A [`FiniteSpace`] owns a validated open-set family over points `0..n`
//! and a precomputed closure table covering all `2^n` subsets. Labels are
//! carried for presentation only; two spaces with the same open sets
//! compare equal regardless of labels.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::mask::{SubsetMask, MAX_POINTS};

/// Presentation label for point `i`: `a`..`z`, then `p26`, `p27`, ...
pub fn default_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("p{i}")
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(default_label).collect()
}

#[derive(Debug, Clone)]
pub struct FiniteSpace {
    labels: Vec<String>,
    /// Sorted by raw mask value.
    opens: Vec<SubsetMask>,
    /// `closure[a.bits()]` is the closure of `a`.
    closure: Vec<SubsetMask>,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

/// Separation and dimension flags of a finite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceFlags {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub discrete: bool,
    pub zero_dimensional: bool,
}

impl FiniteSpace {
    /// Validates `opens` as a topology on `labels.len()` points.
    pub fn new<I>(labels: Vec<String>, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        Self::new_with_limits(labels, opens, &Limits::DEFAULT)
    }

    pub fn new_with_limits<I>(labels: Vec<String>, opens: I, limits: &Limits) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        let n = labels.len();
        let limit = limits.max_space_points.min(MAX_POINTS);
        if n > limit {
            return Err(Error::SpaceTooLarge { points: n, limit });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let opens: BTreeSet<SubsetMask> = opens.into_iter().collect();
        if let Some(bad) = opens.iter().find(|m| !m.fits(n)) {
            return Err(Error::MaskOutOfRange(*bad));
        }
        let opens: Vec<SubsetMask> = opens.into_iter().collect();
        validate_topology(n, &opens)?;
        let closure = closure_table(n, &opens);
        Ok(FiniteSpace {
            labels,
            opens,
            closure,
        })
    }

    /// Builds a space from labelled open sets, e.g. `[[], ["a"], ["a", "b"]]`.
    pub fn from_labeled_opens<S, O>(labels: &[S], opens: &[O]) -> Result<Self>
    where
        S: AsRef<str>,
        O: AsRef<[S]>,
    {
        Self::from_labeled_opens_with_limits(labels, opens, &Limits::DEFAULT)
    }

    pub fn from_labeled_opens_with_limits<S, O>(
        labels: &[S],
        opens: &[O],
        limits: &Limits,
    ) -> Result<Self>
    where
        S: AsRef<str>,
        O: AsRef<[S]>,
    {
        let owned: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let masks = opens
            .iter()
            .map(|open| mask_of(&owned, open.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new_with_limits(owned, masks, limits)
    }

    /// Alexandroff space of a preorder: `relation[x][y]` means `x ≤ y`,
    /// read as `x ∈ cl{y}`. Open sets are exactly the up-sets.
    pub fn from_preorder(labels: Vec<String>, relation: &[Vec<bool>]) -> Result<Self> {
        Self::from_preorder_with_limits(labels, relation, &Limits::DEFAULT)
    }

    pub fn from_preorder_with_limits(
        labels: Vec<String>,
        relation: &[Vec<bool>],
        limits: &Limits,
    ) -> Result<Self> {
        let n = labels.len();
        if relation.len() != n || relation.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                rows: relation.len(),
                expected: n,
            });
        }
        let limit = limits.max_space_points.min(MAX_POINTS);
        if n > limit {
            return Err(Error::SpaceTooLarge { points: n, limit });
        }
        if let Some(x) = (0..n).find(|&x| !relation[x][x]) {
            return Err(Error::NotReflexive(x));
        }
        for x in 0..n {
            for y in 0..n {
                if !relation[x][y] {
                    continue;
                }
                if let Some(z) = (0..n).find(|&z| relation[y][z] && !relation[x][z]) {
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        // up[x] = points above x
        let up: Vec<SubsetMask> = (0..n)
            .map(|x| SubsetMask::from_points((0..n).filter(|&y| relation[x][y])))
            .collect();
        let opens = SubsetMask::all(n).filter(|u| u.points().all(|x| up[x].is_subset(*u)));
        Self::new_with_limits(labels, opens, limits)
    }

    /// Every subset open.
    pub fn discrete(n: usize) -> Self {
        Self::new(default_labels(n), SubsetMask::all(n)).expect("discrete topology is valid")
    }

    /// Only the empty set and the whole space open.
    pub fn indiscrete(n: usize) -> Self {
        Self::new(default_labels(n), [SubsetMask::EMPTY, SubsetMask::full(n)])
            .expect("indiscrete topology is valid")
    }

    /// Points `a`, `b` with `{a}` open and `b` closed.
    pub fn sierpinski() -> Self {
        Self::new(
            default_labels(2),
            [
                SubsetMask::EMPTY,
                SubsetMask::singleton(0),
                SubsetMask::full(2),
            ],
        )
        .expect("Sierpinski topology is valid")
    }

    /// Same topology under new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::DimensionMismatch {
                rows: labels.len(),
                expected: self.n(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(FiniteSpace {
            labels,
            opens: self.opens.clone(),
            closure: self.closure.clone(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn labels_of(&self, mask: SubsetMask) -> Vec<&str> {
        mask.points().map(|p| self.label(p)).collect()
    }

    pub fn mask_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<SubsetMask> {
        mask_of(&self.labels, labels)
    }

    pub fn point_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Open sets, sorted by mask value.
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    /// `o(X)`: number of open sets.
    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    /// Closed sets, sorted by size and then by mask value.
    pub fn closed_sets(&self) -> Vec<SubsetMask> {
        let n = self.n();
        let mut closed: Vec<SubsetMask> = self.opens.iter().map(|u| u.complement(n)).collect();
        closed.sort_by_key(|m| (m.len(), m.bits()));
        closed
    }

    #[inline]
    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        self.closure[a.bits() as usize]
    }

    #[inline]
    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        let n = self.n();
        self.closure(a.complement(n)).complement(n)
    }

    #[inline]
    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.closure(a) == a
    }

    #[inline]
    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.is_closed(a.complement(self.n()))
    }

    #[inline]
    pub fn is_clopen(&self, a: SubsetMask) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    pub fn point_closure(&self, x: usize) -> SubsetMask {
        self.closure(SubsetMask::singleton(x))
    }

    /// Smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> SubsetMask {
        self.opens
            .iter()
            .filter(|u| u.contains(x))
            .fold(self.full(), |acc, u| acc & *u)
    }

    /// Specialization preorder: `m[x][y]` iff `x ∈ cl{y}`.
    pub fn specialization(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|x| (0..n).map(|y| self.point_closure(y).contains(x)).collect())
            .collect()
    }

    pub fn flags(&self) -> SpaceFlags {
        let n = self.n();
        let closures: Vec<SubsetMask> = (0..n).map(|x| self.point_closure(x)).collect();
        let t0 = (0..n).all(|x| (x + 1..n).all(|y| closures[x] != closures[y]));
        let t1 = (0..n).all(|x| closures[x] == SubsetMask::singleton(x));
        let minimal: Vec<SubsetMask> = (0..n).map(|x| self.minimal_open(x)).collect();
        let hausdorff =
            (0..n).all(|x| (x + 1..n).all(|y| (minimal[x] & minimal[y]).is_empty()));
        let discrete = (0..n).all(|x| self.is_open(SubsetMask::singleton(x)));
        debug_assert!(hausdorff == t1 && t1 == discrete);
        SpaceFlags {
            t0,
            t1,
            hausdorff,
            discrete,
            zero_dimensional: self.is_zero_dimensional(),
        }
    }

    /// True when the clopen sets form a base.
    pub fn is_zero_dimensional(&self) -> bool {
        let clopens = self.clopen_sets();
        self.opens.iter().all(|&u| {
            let covered = clopens
                .iter()
                .filter(|c| c.is_subset(u))
                .fold(SubsetMask::EMPTY, |acc, c| acc | *c);
            covered == u
        })
    }

    /// `CO(X)`, sorted by mask value.
    pub fn clopen_sets(&self) -> Vec<SubsetMask> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.is_closed(u))
            .collect()
    }

    /// `RO(X)`: open sets equal to the interior of their closure.
    pub fn regular_open_sets(&self) -> Vec<SubsetMask> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.interior(self.closure(u)) == u)
            .collect()
    }

    /// Least size of a dense subset (exact minimum over all subsets).
    pub fn density(&self) -> usize {
        let full = self.full();
        SubsetMask::all(self.n())
            .filter(|&d| self.closure(d) == full)
            .map(|d| d.len())
            .min()
            .unwrap_or(0)
    }

    /// Subspace on `subset`, with points renumbered in increasing order.
    /// Also returns the original id of each subspace point.
    pub fn subspace(&self, subset: SubsetMask) -> Result<(FiniteSpace, Vec<usize>)> {
        if !subset.fits(self.n()) {
            return Err(Error::MaskOutOfRange(subset));
        }
        let points: Vec<usize> = subset.points().collect();
        let labels = points.iter().map(|&p| self.labels[p].clone()).collect();
        let restrict = |u: SubsetMask| {
            SubsetMask::from_points(
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| u.contains(p))
                    .map(|(i, _)| i),
            )
        };
        let opens: Vec<SubsetMask> = self.opens.iter().map(|&u| restrict(u & subset)).collect();
        let space = FiniteSpace::new_with_limits(labels, opens, &Limits::unbounded())?;
        Ok((space, points))
    }
}

fn mask_of<S: AsRef<str>, T: AsRef<str>>(labels: &[S], wanted: &[T]) -> Result<SubsetMask> {
    wanted.iter().try_fold(SubsetMask::EMPTY, |acc, w| {
        let w = w.as_ref();
        labels
            .iter()
            .position(|l| l.as_ref() == w)
            .map(|p| acc | SubsetMask::singleton(p))
            .ok_or_else(|| Error::UnknownLabel(w.to_string()))
    })
}

fn validate_topology(n: usize, opens: &[SubsetMask]) -> Result<()> {
    let contains = |m: &SubsetMask| opens.binary_search(m).is_ok();
    for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if !contains(&(a | b)) {
                return Err(Error::NotClosedUnderUnion { a, b });
            }
        }
    }
    for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if !contains(&(a & b)) {
                return Err(Error::NotClosedUnderIntersection { a, b });
            }
        }
    }
    if !contains(&SubsetMask::EMPTY) || !contains(&SubsetMask::full(n)) {
        return Err(Error::MissingEmptyOrFull);
    }
    Ok(())
}

/// `cl(A) = ⋃_{x∈A} cl{x}` holds in any finite space, so the table is
/// filled from the point closures by peeling off the lowest point.
fn closure_table(n: usize, opens: &[SubsetMask]) -> Vec<SubsetMask> {
    let full = SubsetMask::full(n);
    let point_closures: Vec<SubsetMask> = (0..n)
        .map(|x| {
            let far = opens
                .iter()
                .filter(|u| !u.contains(x))
                .fold(SubsetMask::EMPTY, |acc, u| acc | *u);
            full - far
        })
        .collect();
    let mut table = vec![SubsetMask::EMPTY; 1usize << n];
    for bits in 1..table.len() {
        let low = bits.trailing_zeros() as usize;
        table[bits] = table[bits & (bits - 1)] | point_closures[low];
    }
    table
}

/// A function between the point sets of two spaces.
#[derive(Debug, Clone)]
pub struct PointMap<'a> {
    source: &'a FiniteSpace,
    target: &'a FiniteSpace,
    table: Vec<usize>,
}

impl PartialEq for PointMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.table == other.table
    }
}

impl<'a> PointMap<'a> {
    pub fn new(source: &'a FiniteSpace, target: &'a FiniteSpace, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.n() {
            return Err(Error::MapLength {
                len: table.len(),
                expected: source.n(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= target.n()) {
            return Err(Error::PointOutOfRange(bad));
        }
        Ok(PointMap {
            source,
            target,
            table,
        })
    }

    pub fn identity(space: &'a FiniteSpace) -> Self {
        PointMap {
            source: space,
            target: space,
            table: (0..space.n()).collect(),
        }
    }

    pub fn constant(source: &'a FiniteSpace, target: &'a FiniteSpace, y: usize) -> Result<Self> {
        Self::new(source, target, vec![y; source.n()])
    }

    pub fn source(&self) -> &'a FiniteSpace {
        self.source
    }

    pub fn target(&self) -> &'a FiniteSpace {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `f[A]`
    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        SubsetMask::from_points(a.points().map(|x| self.table[x]))
    }

    /// `f⁻¹[B]`
    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        SubsetMask::from_points((0..self.table.len()).filter(|&x| b.contains(self.table[x])))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &PointMap<'a>) -> Result<PointMap<'a>> {
        if self.target != g.source {
            return Err(Error::SpaceMismatch);
        }
        Ok(PointMap {
            source: self.source,
            target: g.target,
            table: self.table.iter().map(|&y| g.table[y]).collect(),
        })
    }

    pub fn is_continuous(&self) -> bool {
        self.target
            .opens()
            .iter()
            .all(|&v| self.source.is_open(self.preimage(v)))
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.source.full()).len() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full()) == self.target.full()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `f[U]` is open in the subspace `f[X]` for every open `U`.
    pub fn is_open_onto_range(&self) -> bool {
        let range = self.image(self.source.full());
        let traces: BTreeSet<SubsetMask> =
            self.target.opens().iter().map(|&v| v & range).collect();
        self.source
            .opens()
            .iter()
            .all(|&u| traces.contains(&self.image(u)))
    }

    pub fn inverse(&self) -> Option<PointMap<'a>> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(PointMap {
            source: self.target,
            target: self.source,
            table,
        })
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_continuous()
            && self
                .inverse()
                .is_some_and(|inverse| inverse.is_continuous())
    }
}

/// Every function `source → target`, in lexicographic order of tables.
pub fn all_maps<'a>(
    source: &'a FiniteSpace,
    target: &'a FiniteSpace,
    limits: &Limits,
) -> Result<Vec<PointMap<'a>>> {
    let (m, k) = (source.n(), target.n());
    let count = (k as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    limits.check("maps", count, limits.max_maps)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut table = vec![0usize; m];
    loop {
        out.push(PointMap {
            source,
            target,
            table: table.clone(),
        });
        // odometer, last position fastest
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            table[i] += 1;
            if table[i] < k {
                break;
            }
            table[i] = 0;
        }
    }
}

/// All homeomorphisms `source → target`, in lexicographic order of tables.
///
/// Backtracks over bijections that preserve the specialization preorder,
/// pruning on point-closure and minimal-neighbourhood sizes, then confirms
/// each candidate by checking continuity both ways.
pub fn homeomorphisms<'a>(
    source: &'a FiniteSpace,
    target: &'a FiniteSpace,
    limits: &Limits,
) -> Result<Vec<PointMap<'a>>> {
    let n = source.n();
    if n != target.n() || source.open_count() != target.open_count() {
        return Ok(Vec::new());
    }
    let bijections = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    limits.check(
        "homeomorphism candidates",
        bijections.unwrap_or(u128::MAX),
        limits.max_maps,
    )?;
    let signature = |s: &FiniteSpace, x: usize| (s.point_closure(x).len(), s.minimal_open(x).len());
    let src_sig: Vec<_> = (0..n).map(|x| signature(source, x)).collect();
    let tgt_sig: Vec<_> = (0..n).map(|y| signature(target, y)).collect();
    let src_order = source.specialization();
    let tgt_order = target.specialization();

    let mut found = Vec::new();
    let mut table = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_homeomorphism(
        0,
        &mut table,
        &mut used,
        &|x, y, table: &[usize]| {
            src_sig[x] == tgt_sig[y]
                && (0..x).all(|z| {
                    src_order[x][z] == tgt_order[y][table[z]]
                        && src_order[z][x] == tgt_order[table[z]][y]
                })
        },
        &mut |table: &[usize]| found.push(table.to_vec()),
    );
    Ok(found
        .into_iter()
        .map(|table| PointMap {
            source,
            target,
            table,
        })
        .filter(|f| f.is_homeomorphism())
        .collect())
}

fn extend_homeomorphism(
    x: usize,
    table: &mut [usize],
    used: &mut [bool],
    compatible: &dyn Fn(usize, usize, &[usize]) -> bool,
    emit: &mut dyn FnMut(&[usize]),
) {
    if x == table.len() {
        emit(table);
        return;
    }
    for y in 0..table.len() {
        if used[y] || !compatible(x, y, table) {
            continue;
        }
        used[y] = true;
        table[x] = y;
        extend_homeomorphism(x + 1, table, used, compatible, emit);
        used[y] = false;
    }
    table[x] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    #[test]
    fn sierpinski_closures() {
        let s = FiniteSpace::from_labeled_opens(&["a", "b"], &[&[][..], &["a"], &["a", "b"]])
            .unwrap();
        assert_eq!(s.point_closure(0), m(&[0, 1]));
        assert_eq!(s.point_closure(1), m(&[1]));
        assert_eq!(s, FiniteSpace::sierpinski());
    }

    #[test]
    fn indiscrete_closure() {
        let s = FiniteSpace::from_labeled_opens(&["a", "b"], &[&[][..], &["a", "b"]]).unwrap();
        assert_eq!(s.point_closure(0), m(&[0, 1]));
    }

    #[test]
    fn missing_whole_space_is_a_union_failure() {
        let err = FiniteSpace::from_labeled_opens(&["a", "b"], &[&[][..], &["a"], &["b"]])
            .unwrap_err();
        assert!(matches!(err, Error::NotClosedUnderUnion { .. }));
    }

    #[test]
    fn construction_errors() {
        let err = FiniteSpace::from_labeled_opens(&["a", "b"], &[&[][..], &["a"]]).unwrap_err();
        assert_eq!(err, Error::MissingEmptyOrFull);
        let err = FiniteSpace::from_labeled_opens(
            &["a", "b", "c"],
            &[&[][..], &["a", "b"], &["b", "c"], &["a", "b", "c"]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotClosedUnderIntersection { .. }));
        let err = FiniteSpace::from_labeled_opens(&["a", "a"], &[&[][..], &["a"]]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
        let err = FiniteSpace::from_labeled_opens(&["a"], &[&[][..], &["z"]]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn preorder_examples() {
        let labels = || default_labels(3);
        let antichain: Vec<Vec<bool>> = (0..3).map(|x| (0..3).map(|y| x == y).collect()).collect();
        assert_eq!(
            FiniteSpace::from_preorder(labels(), &antichain).unwrap(),
            FiniteSpace::discrete(3)
        );
        // a ≤ b: up-sets are ∅, {b}, {a,b}
        let chain = [vec![true, true], vec![false, true]];
        let s = FiniteSpace::from_preorder(default_labels(2), &chain).unwrap();
        assert_eq!(s.opens(), &[m(&[]), m(&[1]), m(&[0, 1])]);
        let total = [vec![true, true], vec![true, true]];
        assert_eq!(
            FiniteSpace::from_preorder(default_labels(2), &total).unwrap(),
            FiniteSpace::indiscrete(2)
        );
        let bad = [vec![false, true], vec![false, true]];
        assert_eq!(
            FiniteSpace::from_preorder(default_labels(2), &bad).unwrap_err(),
            Error::NotReflexive(0)
        );
        let bad = [
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert_eq!(
            FiniteSpace::from_preorder(labels(), &bad).unwrap_err(),
            Error::NotTransitive(0, 1, 2)
        );
    }

    #[test]
    fn flag_examples() {
        let d = FiniteSpace::discrete(3).flags();
        assert!(d.t0 && d.t1 && d.hausdorff && d.discrete && d.zero_dimensional);
        let s = FiniteSpace::sierpinski().flags();
        assert!(s.t0 && !s.t1 && !s.zero_dimensional);
        let i = FiniteSpace::indiscrete(2).flags();
        assert!(!i.t0 && i.zero_dimensional);
    }

    #[test]
    fn set_families() {
        let d = FiniteSpace::discrete(3);
        assert_eq!(d.clopen_sets().len(), 8);
        assert_eq!(d.regular_open_sets().len(), 8);
        assert_eq!(d.density(), 3);
        assert_eq!(d.open_count(), 8);

        let s = FiniteSpace::sierpinski();
        assert_eq!(s.regular_open_sets(), [m(&[]), m(&[0, 1])]);
        assert_eq!(s.density(), 1);

        let i = FiniteSpace::indiscrete(2);
        assert_eq!(i.clopen_sets(), [m(&[]), m(&[0, 1])]);
        assert_eq!(i.density(), 1);
        assert_eq!(FiniteSpace::discrete(0).density(), 0);
    }

    #[test]
    fn map_examples() {
        let s = FiniteSpace::sierpinski();
        let id = PointMap::identity(&s);
        assert!(id.is_continuous() && id.is_open_onto_range() && id.is_homeomorphism());
        let swap = PointMap::new(&s, &s, vec![1, 0]).unwrap();
        assert!(!swap.is_continuous());
        let d = FiniteSpace::discrete(3);
        assert_eq!(homeomorphisms(&d, &d, &Limits::DEFAULT).unwrap().len(), 6);
        assert_eq!(homeomorphisms(&s, &s, &Limits::DEFAULT).unwrap().len(), 1);
        assert!(PointMap::new(&s, &s, vec![0]).is_err());
        assert!(PointMap::new(&s, &s, vec![0, 2]).is_err());
    }

    #[test]
    fn all_maps_guard() {
        let d = FiniteSpace::discrete(3);
        assert_eq!(all_maps(&d, &d, &Limits::DEFAULT).unwrap().len(), 27);
        let tight = Limits {
            max_maps: 26,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            all_maps(&d, &d, &tight),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        let empty = FiniteSpace::discrete(0);
        assert_eq!(all_maps(&empty, &d, &Limits::DEFAULT).unwrap().len(), 1);
        assert!(all_maps(&d, &empty, &Limits::DEFAULT).unwrap().is_empty());
    }

    #[test]
    fn subspace_of_sierpinski_closed_point() {
        let s = FiniteSpace::sierpinski();
        let (sub, points) = s.subspace(m(&[1])).unwrap();
        assert_eq!(points, [1]);
        assert_eq!(sub.labels(), ["b"]);
        assert_eq!(sub, FiniteSpace::discrete(1));
    }
}
