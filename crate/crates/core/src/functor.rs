//! Maps between lattices induced by point maps, and the checkers that
//! compare point-level properties of a map with lattice-level properties
//! of the relation it induces.
//!
//! Each checker evaluates both sides independently and carries the
//! hypothesis class under which the equivalence is asserted on arbitrary
//! finite spaces. Outside that class the outcome is recorded, except for
//! directions that hold unconditionally, which are still asserted.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::UniformLattice;
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::space::{FiniteSpace, PointMap};

/// A relation between the elements of two lattices, stored as sorted,
/// deduplicated index pairs.
#[derive(Debug, Clone)]
pub struct LatticeMap<'a> {
    source: &'a UniformLattice<'a>,
    target: &'a UniformLattice<'a>,
    pairs: Vec<(usize, usize)>,
}

impl PartialEq for LatticeMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.source.space() == other.source.space()
            && self.target.space() == other.target.space()
            && self.pairs == other.pairs
    }
}

impl<'a> LatticeMap<'a> {
    pub fn from_pairs<I>(
        source: &'a UniformLattice<'a>,
        target: &'a UniformLattice<'a>,
        pairs: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(i, j) in &pairs {
            if i >= source.len() {
                return Err(Error::ElementOutOfRange(i));
            }
            if j >= target.len() {
                return Err(Error::ElementOutOfRange(j));
            }
        }
        Ok(LatticeMap {
            source,
            target,
            pairs: pairs.into_iter().collect(),
        })
    }

    /// Total function given by `table[i]`.
    pub fn from_table(
        source: &'a UniformLattice<'a>,
        target: &'a UniformLattice<'a>,
        table: &[usize],
    ) -> Result<Self> {
        if table.len() != source.len() {
            return Err(Error::MapLength {
                len: table.len(),
                expected: source.len(),
            });
        }
        Self::from_pairs(source, target, table.iter().copied().enumerate())
    }

    pub fn source(&self) -> &'a UniformLattice<'a> {
        self.source
    }

    pub fn target(&self) -> &'a UniformLattice<'a> {
        self.target
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn domain(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.pairs.iter().map(|p| p.0).collect();
        set.into_iter().collect()
    }

    pub fn range(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.pairs.iter().map(|p| p.1).collect();
        set.into_iter().collect()
    }

    /// Every source element related to at most one target element.
    pub fn is_single_valued(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].0 != w[1].0)
    }

    pub fn is_total(&self) -> bool {
        self.domain().len() == self.source.len()
    }

    pub fn is_function(&self) -> bool {
        self.is_single_valued() && self.is_total()
    }

    /// Single-valued and monotone on its domain.
    pub fn is_order_preserving_function(&self) -> bool {
        self.is_single_valued()
            && self.pairs.iter().all(|&(i, fi)| {
                self.pairs
                    .iter()
                    .all(|&(j, fj)| !self.source.leq(i, j) || self.target.leq(fi, fj))
            })
    }

    /// Image of `i` when the relation is single-valued there.
    pub fn apply(&self, i: usize) -> Option<usize> {
        let mut hits = self.pairs.iter().filter(|p| p.0 == i).map(|p| p.1);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    pub fn as_table(&self) -> Option<Vec<usize>> {
        if !self.is_function() {
            return None;
        }
        Some(self.pairs.iter().map(|p| p.1).collect())
    }

    pub fn inverse(&self) -> LatticeMap<'a> {
        let mut pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        LatticeMap {
            source: self.target,
            target: self.source,
            pairs,
        }
    }

    /// Relational composite: `self` first, then `next`.
    pub fn then(&self, next: &LatticeMap<'a>) -> Result<LatticeMap<'a>> {
        if self.target.space() != next.source.space() {
            return Err(Error::SpaceMismatch);
        }
        let pairs: BTreeSet<(usize, usize)> = self
            .pairs
            .iter()
            .flat_map(|&(i, j)| {
                next.pairs
                    .iter()
                    .filter(move |q| q.0 == j)
                    .map(move |q| (i, q.1))
            })
            .collect();
        Ok(LatticeMap {
            source: self.source,
            target: next.target,
            pairs: pairs.into_iter().collect(),
        })
    }

    /// Total, injective, and `i ≤ j ⇔ φ(i) ≤ φ(j)`.
    pub fn is_order_embedding(&self) -> bool {
        let Some(table) = self.as_table() else {
            return false;
        };
        let k = table.len();
        (0..k).all(|i| {
            (0..k).all(|j| self.source.leq(i, j) == self.target.leq(table[i], table[j]))
        }) && table.iter().collect::<BTreeSet<_>>().len() == k
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_order_embedding() && self.range().len() == self.target.len()
    }
}

fn check_lattices(f: &PointMap<'_>, lx: &UniformLattice<'_>, ly: &UniformLattice<'_>) -> Result<()> {
    if f.source() != lx.space() || f.target() != ly.space() {
        Err(Error::SpaceMismatch)
    } else {
        Ok(())
    }
}

/// The relation `{(C_α, C_{f*α})}`.
///
/// Every directed family on a finite space is equivalent to the
/// single-member family of its greatest member `M`, and `f*α` has greatest
/// member `f[M]`, so ranging over `{A}` for all subsets `A` produces every
/// pair the full relation contains.
pub fn induced_relation<'a>(
    f: &PointMap<'_>,
    lx: &'a UniformLattice<'a>,
    ly: &'a UniformLattice<'a>,
) -> Result<LatticeMap<'a>> {
    check_lattices(f, lx, ly)?;
    let pairs: Vec<(usize, usize)> = SubsetMask::all(lx.space().n())
        .map(|a| (lx.class_of_set(a), ly.class_of_set(f.image(a))))
        .collect();
    LatticeMap::from_pairs(lx, ly, pairs)
}

/// Minimal hypothesis class under which a checker asserts its equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HypothesisClass {
    All,
    T0Source,
    /// Source and target both T0.
    T0Both,
    T1Target,
    ZeroDimensional,
    Discrete,
}

impl HypothesisClass {
    pub fn name(self) -> &'static str {
        match self {
            HypothesisClass::All => "all",
            HypothesisClass::T0Source => "t0-source",
            HypothesisClass::T0Both => "t0-both",
            HypothesisClass::T1Target => "t1-target",
            HypothesisClass::ZeroDimensional => "zero-dimensional",
            HypothesisClass::Discrete => "discrete",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    Recorded,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Recorded => "recorded",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MapProposition {
    /// `f` continuous ⇔ induced relation is an order-preserving function.
    Continuity,
    /// `f` injective and open onto its range ⇔ inverse relation is an
    /// order-preserving function.
    InjectiveOpen,
    /// `f` onto ⇔ range of the induced relation is the whole lattice.
    Onto,
}

impl MapProposition {
    pub fn id(self) -> &'static str {
        match self {
            MapProposition::Continuity => "functor.continuity",
            MapProposition::InjectiveOpen => "functor.injective-open",
            MapProposition::Onto => "functor.onto",
        }
    }
}

/// Outcome of one checker on one map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub proposition: MapProposition,
    pub hypothesis: HypothesisClass,
    pub hypothesis_met: bool,
    pub lhs: bool,
    pub rhs: bool,
    pub verdict: Verdict,
}

impl EquivalenceReport {
    /// `forward_always`: `lhs ⇒ rhs` is asserted even outside the class.
    fn new(
        proposition: MapProposition,
        hypothesis: HypothesisClass,
        hypothesis_met: bool,
        lhs: bool,
        rhs: bool,
        forward_always: bool,
    ) -> Self {
        let verdict = if hypothesis_met {
            if lhs == rhs {
                Verdict::Holds
            } else {
                Verdict::Fails
            }
        } else if forward_always && lhs && !rhs {
            Verdict::Fails
        } else {
            Verdict::Recorded
        };
        EquivalenceReport {
            proposition,
            hypothesis,
            hypothesis_met,
            lhs,
            rhs,
            verdict,
        }
    }
}

pub fn check_continuity_equiv(
    f: &PointMap<'_>,
    lx: &UniformLattice<'_>,
    ly: &UniformLattice<'_>,
) -> Result<EquivalenceReport> {
    let phi = induced_relation(f, lx, ly)?;
    Ok(EquivalenceReport::new(
        MapProposition::Continuity,
        HypothesisClass::All,
        true,
        f.is_continuous(),
        phi.is_function() && phi.is_order_preserving_function(),
        true,
    ))
}

/// The converse direction needs distinct point closures in the source.
pub fn check_injective_open_equiv(
    f: &PointMap<'_>,
    lx: &UniformLattice<'_>,
    ly: &UniformLattice<'_>,
) -> Result<EquivalenceReport> {
    let phi = induced_relation(f, lx, ly)?;
    Ok(EquivalenceReport::new(
        MapProposition::InjectiveOpen,
        HypothesisClass::T0Source,
        f.source().flags().t0,
        f.is_injective() && f.is_open_onto_range(),
        phi.inverse().is_order_preserving_function(),
        true,
    ))
}

/// The converse direction needs closed points in the target.
pub fn check_onto_equiv(
    f: &PointMap<'_>,
    lx: &UniformLattice<'_>,
    ly: &UniformLattice<'_>,
) -> Result<EquivalenceReport> {
    let phi = induced_relation(f, lx, ly)?;
    Ok(EquivalenceReport::new(
        MapProposition::Onto,
        HypothesisClass::T1Target,
        f.target().flags().t1,
        f.is_surjective(),
        phi.range().len() == ly.len(),
        true,
    ))
}

/// Outcome of comparing `φ_{g∘f}` with `φ_g ∘ φ_f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorialityReport {
    pub equal: bool,
    /// Asserted when `g` is continuous, so that `φ_g` is a function.
    pub asserted: bool,
}

pub fn check_functoriality(
    f: &PointMap<'_>,
    g: &PointMap<'_>,
    lx: &UniformLattice<'_>,
    ly: &UniformLattice<'_>,
    lz: &UniformLattice<'_>,
) -> Result<FunctorialityReport> {
    let gf = f.then(g)?;
    let direct = induced_relation(&gf, lx, lz)?;
    let composite = induced_relation(f, lx, ly)?.then(&induced_relation(g, ly, lz)?)?;
    Ok(FunctorialityReport {
        equal: direct == composite,
        asserted: g.is_continuous(),
    })
}

/// The `φ`-induced point map: `φ(C_x) = C_{f(x)}` for every point `x`.
pub fn extract_point_map<'a>(phi: &LatticeMap<'a>) -> Result<PointMap<'a>> {
    if !phi.is_isomorphism() {
        return Err(Error::NotAnIsomorphism);
    }
    let (lx, ly) = (phi.source(), phi.target());
    let (x, y) = (lx.space(), ly.space());
    let table = (0..x.n())
        .map(|p| {
            let image = phi
                .apply(lx.class_of_set(SubsetMask::singleton(p)))
                .expect("isomorphisms are functions");
            let mut witnesses =
                (0..y.n()).filter(|&q| ly.class_of_set(SubsetMask::singleton(q)) == image);
            match (witnesses.next(), witnesses.next()) {
                (None, _) => Err(Error::NoPointWitness(p)),
                (Some(q), None) => Ok(q),
                (Some(_), Some(_)) => Err(Error::AmbiguousWitness(p)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PointMap::new(x, y, table)
}

fn extraction_failed(err: Error) -> Error {
    match err {
        Error::NotAnIsomorphism => Error::NotAnIsomorphism,
        Error::NoPointWitness(_) => Error::ExtractionFailed("no point witness"),
        Error::AmbiguousWitness(_) => Error::ExtractionFailed("ambiguous point witness"),
        _ => Error::ExtractionFailed("point map invalid"),
    }
}

/// Facts about the point map extracted from an isomorphism and how it
/// moves clopen sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClopenTransferReport {
    pub map: Vec<usize>,
    /// `f` is a bijection.
    pub bijective: bool,
    /// `f⁻¹` is the point map extracted from `φ⁻¹`.
    pub inverse_matches: bool,
    pub clopens_checked: usize,
    /// Every clopen `A` has `f[A]` clopen and `φ(C_A) = C_{f[A]}`.
    pub clopens_transfer: bool,
    /// When the target is zero-dimensional: whether `f` is continuous.
    pub continuous_if_target_zero_dim: Option<bool>,
}

impl ClopenTransferReport {
    pub fn holds(&self) -> bool {
        self.bijective
            && self.inverse_matches
            && self.clopens_transfer
            && self.continuous_if_target_zero_dim != Some(false)
    }
}

pub fn check_clopen_transfer(phi: &LatticeMap<'_>) -> Result<ClopenTransferReport> {
    let f = extract_point_map(phi).map_err(extraction_failed)?;
    let g = extract_point_map(&phi.inverse()).map_err(extraction_failed)?;
    let (lx, ly) = (phi.source(), phi.target());
    let inverse_matches = f.inverse().is_some_and(|inv| inv.table() == g.table());
    let clopens = lx.space().clopen_sets();
    let clopens_transfer = clopens.iter().all(|&a| {
        let image = f.image(a);
        ly.space().is_clopen(image) && phi.apply(lx.class_of_set(a)) == Some(ly.class_of_set(image))
    });
    Ok(ClopenTransferReport {
        map: f.table().to_vec(),
        bijective: f.is_bijective(),
        inverse_matches,
        clopens_checked: clopens.len(),
        clopens_transfer,
        continuous_if_target_zero_dim: ly
            .space()
            .is_zero_dimensional()
            .then(|| f.is_continuous()),
    })
}

/// The three equivalent descriptions of an isomorphism between lattices of
/// zero-dimensional spaces, checked on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDimReport {
    pub map: Vec<usize>,
    pub homeomorphism: bool,
    /// `φ(C_G) ≤ C_{f[G]}` for every closed `G`.
    pub closed_upper_bound: bool,
    /// (3) `φ(C_G) = C_{f[G]}` for every closed `G`.
    pub closed_sets_transfer: bool,
    /// (2) `φ(C_A) = C_{f[A]}` for every subset `A`.
    pub all_sets_transfer: bool,
    /// (1) `φ` is the `f`-induced relation.
    pub equals_induced_relation: bool,
}

impl ZeroDimReport {
    pub fn holds(&self) -> bool {
        self.homeomorphism
            && self.closed_upper_bound
            && self.closed_sets_transfer
            && self.all_sets_transfer
            && self.equals_induced_relation
    }
}

pub fn roundtrip_zero_dim(phi: &LatticeMap<'_>) -> Result<ZeroDimReport> {
    let (lx, ly) = (phi.source(), phi.target());
    if !lx.space().is_zero_dimensional() || !ly.space().is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let f = extract_point_map(phi).map_err(extraction_failed)?;
    let sends = |a: SubsetMask| phi.apply(lx.class_of_set(a));
    let closed = lx.space().closed_sets();
    let closed_upper_bound = closed.iter().all(|&g| {
        sends(g).is_some_and(|image| ly.leq(image, ly.class_of_set(f.image(g))))
    });
    let closed_sets_transfer = closed
        .iter()
        .all(|&g| sends(g) == Some(ly.class_of_set(f.image(g))));
    let all_sets_transfer =
        SubsetMask::all(lx.space().n()).all(|a| sends(a) == Some(ly.class_of_set(f.image(a))));
    let equals_induced_relation = induced_relation(&f, lx, ly)? == *phi;
    Ok(ZeroDimReport {
        map: f.table().to_vec(),
        homeomorphism: f.is_homeomorphism(),
        closed_upper_bound,
        closed_sets_transfer,
        all_sets_transfer,
        equals_induced_relation,
    })
}

/// Induced relation of the inclusion of a subspace, whose points are the
/// ids `points` of `whole`'s space.
pub fn subspace_embedding<'a>(
    sub: &'a UniformLattice<'a>,
    whole: &'a UniformLattice<'a>,
    points: &[usize],
) -> Result<LatticeMap<'a>> {
    let inclusion = PointMap::new(sub.space(), whole.space(), points.to_vec())?;
    induced_relation(&inclusion, sub, whole)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub subspace_points: Vec<usize>,
    /// `table[i]` is the image of subspace-lattice element `i`.
    pub table: Vec<usize>,
    pub subspace_lattice_size: usize,
    pub lattice_size: usize,
    pub order_embedding: bool,
}

impl EmbeddingReport {
    pub fn holds(&self) -> bool {
        self.order_embedding && self.subspace_lattice_size <= self.lattice_size
    }
}

/// Order-embedding of the lattice of the subspace on `subset` into the
/// lattice of `space`.
pub fn embedding_from_subspace(
    space: &FiniteSpace,
    subset: SubsetMask,
    limits: &Limits,
) -> Result<EmbeddingReport> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let (sub, points) = space.subspace(subset)?;
    let ls = UniformLattice::build(&sub, limits)?;
    let lx = UniformLattice::build(space, limits)?;
    let phi = subspace_embedding(&ls, &lx, &points)?;
    Ok(EmbeddingReport {
        table: phi.as_table().unwrap_or_default(),
        subspace_points: points,
        subspace_lattice_size: ls.len(),
        lattice_size: lx.len(),
        order_embedding: phi.is_order_embedding(),
    })
}

/// Lattice isomorphisms as [`LatticeMap`]s.
pub fn isomorphisms<'a>(
    lx: &'a UniformLattice<'a>,
    ly: &'a UniformLattice<'a>,
    limits: &Limits,
) -> Result<Vec<LatticeMap<'a>>> {
    crate::lattice::iso_search(lx, ly, limits)?
        .iter()
        .map(|table| LatticeMap::from_table(lx, ly, table))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::all_maps;
    use alloc::vec;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    fn lat(space: &FiniteSpace) -> UniformLattice<'_> {
        UniformLattice::build(space, &Limits::DEFAULT).unwrap()
    }

    #[test]
    fn induced_relation_examples() {
        let d2 = FiniteSpace::discrete(2);
        let l = lat(&d2);
        let id = induced_relation(&PointMap::identity(&d2), &l, &l).unwrap();
        assert_eq!(id.as_table().unwrap(), [0, 1, 2, 3]);
        assert!(id.is_order_preserving_function());

        let s = FiniteSpace::sierpinski();
        let l = lat(&s);
        let to_b = PointMap::new(&s, &s, vec![1, 1]).unwrap();
        assert!(to_b.is_continuous());
        let phi = induced_relation(&to_b, &l, &l).unwrap();
        // ∅ ↦ ∅, {b} ↦ {b}, X ↦ {b}
        assert_eq!(phi.as_table().unwrap(), [0, 1, 1]);
        assert!(phi.is_order_preserving_function());

        let swap = PointMap::new(&s, &s, vec![1, 0]).unwrap();
        let phi = induced_relation(&swap, &l, &l).unwrap();
        assert!(!phi.is_order_preserving_function());
        assert_eq!(phi.pairs(), [(0, 0), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn continuity_examples() {
        let s = FiniteSpace::sierpinski();
        let l = lat(&s);
        for f in all_maps(&s, &s, &Limits::DEFAULT).unwrap() {
            let r = check_continuity_equiv(&f, &l, &l).unwrap();
            assert_eq!(r.verdict, Verdict::Holds, "{:?}", f.table());
        }
        let swap = PointMap::new(&s, &s, vec![1, 0]).unwrap();
        let r = check_continuity_equiv(&swap, &l, &l).unwrap();
        assert!(!r.lhs && !r.rhs);
    }

    #[test]
    fn injective_open_examples() {
        let d3 = FiniteSpace::discrete(3);
        let l3 = lat(&d3);
        let r = check_injective_open_equiv(&PointMap::identity(&d3), &l3, &l3).unwrap();
        assert!(r.lhs && r.rhs && r.verdict == Verdict::Holds);

        let d2 = FiniteSpace::discrete(2);
        let l2 = lat(&d2);
        let c = PointMap::constant(&d2, &d2, 0).unwrap();
        let r = check_injective_open_equiv(&c, &l2, &l2).unwrap();
        assert!(!r.lhs && !r.rhs && r.verdict == Verdict::Holds);

        let s = FiniteSpace::sierpinski();
        let (point, _) = s.subspace(m(&[1])).unwrap();
        let (lp, ls) = (lat(&point), lat(&s));
        let inclusion = PointMap::new(&point, &s, vec![1]).unwrap();
        let r = check_injective_open_equiv(&inclusion, &lp, &ls).unwrap();
        assert!(r.lhs && r.rhs);
    }

    #[test]
    fn non_t0_source_is_recorded() {
        let i2 = FiniteSpace::indiscrete(2);
        let p = FiniteSpace::discrete(1);
        let (li, lp) = (lat(&i2), lat(&p));
        let c = PointMap::constant(&i2, &p, 0).unwrap();
        let r = check_injective_open_equiv(&c, &li, &lp).unwrap();
        assert!(!r.lhs && r.rhs);
        assert_eq!(r.verdict, Verdict::Recorded);
    }

    #[test]
    fn onto_examples() {
        let d2 = FiniteSpace::discrete(2);
        let l = lat(&d2);
        let swap = PointMap::new(&d2, &d2, vec![1, 0]).unwrap();
        let r = check_onto_equiv(&swap, &l, &l).unwrap();
        assert!(r.lhs && r.rhs);
        let c = PointMap::constant(&d2, &d2, 1).unwrap();
        let phi = induced_relation(&c, &l, &l).unwrap();
        assert_eq!(phi.range().len(), 2);
        assert_eq!(check_onto_equiv(&c, &l, &l).unwrap().verdict, Verdict::Holds);

        let s = FiniteSpace::sierpinski();
        let ls = lat(&s);
        let to_b = PointMap::new(&s, &s, vec![1, 1]).unwrap();
        let phi = induced_relation(&to_b, &ls, &ls).unwrap();
        assert_eq!(phi.range(), [0, 1]);
        let r = check_onto_equiv(&to_b, &ls, &ls).unwrap();
        assert!(!r.lhs && !r.rhs && r.verdict == Verdict::Recorded);
    }

    #[test]
    fn extraction_examples() {
        let d3 = FiniteSpace::discrete(3);
        let l = lat(&d3);
        let id = LatticeMap::from_table(&l, &l, &(0..8).collect::<Vec<_>>()).unwrap();
        assert_eq!(extract_point_map(&id).unwrap().table(), [0, 1, 2]);

        let d2 = FiniteSpace::discrete(2);
        let l2 = lat(&d2);
        let isos = isomorphisms(&l2, &l2, &Limits::DEFAULT).unwrap();
        let swap = isos.iter().find(|p| p.apply(1) != Some(1)).unwrap();
        assert_eq!(extract_point_map(swap).unwrap().table(), [1, 0]);

        let s = FiniteSpace::sierpinski();
        let other = FiniteSpace::new(
            ["u", "v"].iter().map(|s| alloc::string::String::from(*s)).collect(),
            [m(&[]), m(&[1]), m(&[0, 1])],
        )
        .unwrap();
        let (ls, lo) = (lat(&s), lat(&other));
        let isos = isomorphisms(&ls, &lo, &Limits::DEFAULT).unwrap();
        assert_eq!(isos.len(), 1);
        // closed point b goes to closed point u
        assert_eq!(extract_point_map(&isos[0]).unwrap().table(), [1, 0]);

        let i2 = FiniteSpace::indiscrete(2);
        let li = lat(&i2);
        let id = LatticeMap::from_table(&li, &li, &[0, 1]).unwrap();
        assert_eq!(extract_point_map(&id).unwrap_err(), Error::AmbiguousWitness(0));

        let not_iso = LatticeMap::from_table(&l2, &l2, &[0, 0, 0, 0]).unwrap();
        assert_eq!(extract_point_map(&not_iso).unwrap_err(), Error::NotAnIsomorphism);
    }

    #[test]
    fn zero_dim_roundtrip_examples() {
        let d3 = FiniteSpace::discrete(3);
        let l = lat(&d3);
        let isos = isomorphisms(&l, &l, &Limits::DEFAULT).unwrap();
        assert_eq!(isos.len(), 6);
        for phi in &isos {
            let r = roundtrip_zero_dim(phi).unwrap();
            assert!(r.holds(), "{r:?}");
            assert!(check_clopen_transfer(phi).unwrap().holds());
        }
        let d2 = FiniteSpace::discrete(2);
        assert!(isomorphisms(&lat(&d2), &l, &Limits::DEFAULT).unwrap().is_empty());

        let d1 = FiniteSpace::discrete(1);
        let l1 = lat(&d1);
        let id = LatticeMap::from_table(&l1, &l1, &[0, 1]).unwrap();
        assert_eq!(roundtrip_zero_dim(&id).unwrap().map, [0]);

        let s = FiniteSpace::sierpinski();
        let ls = lat(&s);
        let id = LatticeMap::from_table(&ls, &ls, &[0, 1, 2]).unwrap();
        assert_eq!(roundtrip_zero_dim(&id).unwrap_err(), Error::NotZeroDimensional);
    }

    #[test]
    fn embedding_examples() {
        let s = FiniteSpace::sierpinski();
        let r = embedding_from_subspace(&s, m(&[1]), &Limits::DEFAULT).unwrap();
        assert_eq!((r.subspace_lattice_size, r.lattice_size), (2, 3));
        assert_eq!(r.table, [0, 1]);
        assert!(r.holds());

        let r = embedding_from_subspace(&s, m(&[0, 1]), &Limits::DEFAULT).unwrap();
        assert_eq!(r.table, [0, 1, 2]);

        let d3 = FiniteSpace::discrete(3);
        let r = embedding_from_subspace(&d3, m(&[0]), &Limits::DEFAULT).unwrap();
        assert_eq!((r.subspace_lattice_size, r.lattice_size), (2, 8));
        assert!(r.holds());

        assert_eq!(
            embedding_from_subspace(&d3, m(&[]), &Limits::DEFAULT).unwrap_err(),
            Error::EmptySubset
        );
    }

    #[test]
    fn functoriality_on_continuous_second_map() {
        let s = FiniteSpace::sierpinski();
        let d2 = FiniteSpace::discrete(2);
        let (ls, ld) = (lat(&s), lat(&d2));
        for f in all_maps(&d2, &s, &Limits::DEFAULT).unwrap() {
            for g in all_maps(&s, &s, &Limits::DEFAULT).unwrap() {
                let r = check_functoriality(&f, &g, &ld, &ls, &ls).unwrap();
                assert!(!r.asserted || r.equal);
            }
        }
    }
}
