//! Exhaustive enumeration and counting over all spaces of a given size.
//!
//! Counting is labelled: two topologies on `{0, .., n-1}` that differ as
//! sets of open sets count twice even when homeomorphic. Enumeration order
//! is lexicographic on the sorted open-set lists.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::is_directed;
use crate::lattice::{first_isomorphism, UniformLattice};
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::space::{default_label, homeomorphisms, FiniteSpace, SpaceFlags};

/// Bytes charged per stored open-set family against `Limits::max_bytes`.
fn family_bytes(family: &[SubsetMask]) -> u64 {
    (core::mem::size_of::<Vec<SubsetMask>>() + core::mem::size_of_val(family)) as u64
}

/// Every topology on `n` points as a sorted open-set list.
///
/// Backtracks over subsets in increasing mask order, deciding membership
/// of each. Including `S` requires `S ∩ T` to be present for every
/// included `T` (it is numerically smaller, so already decided) and makes
/// every `S ∪ T` mandatory later on.
pub fn enumerate_open_families(n: usize, limits: &Limits) -> Result<Vec<Vec<SubsetMask>>> {
    if n > limits.max_topology_points {
        return Err(Error::SearchSpaceTooLarge {
            what: "topology enumeration points",
            size: n as u128,
            limit: limits.max_topology_points as u128,
        });
    }
    let size = 1usize << n;
    let mut state = OpenFamilySearch {
        full: size - 1,
        included: vec![false; size],
        required: vec![0u32; size],
        members: Vec::new(),
        out: Vec::new(),
        bytes: 0,
        limits,
    };
    state.decide(0)?;
    let mut out = state.out;
    out.sort();
    Ok(out)
}

struct OpenFamilySearch<'l> {
    full: usize,
    included: Vec<bool>,
    required: Vec<u32>,
    members: Vec<usize>,
    out: Vec<Vec<SubsetMask>>,
    bytes: u64,
    limits: &'l Limits,
}

impl OpenFamilySearch<'_> {
    fn decide(&mut self, s: usize) -> Result<()> {
        if s > self.full {
            let family: Vec<SubsetMask> = self
                .members
                .iter()
                .map(|&m| SubsetMask::from_bits(m as u32))
                .collect();
            self.bytes += family_bytes(&family);
            self.limits.check_bytes(self.bytes)?;
            self.out.push(family);
            return Ok(());
        }
        let forced = s == 0 || s == self.full || self.required[s] > 0;
        if !forced {
            self.decide(s + 1)?;
        }
        if self.members.iter().all(|&t| self.included[t & s]) {
            let unions: Vec<usize> = self
                .members
                .iter()
                .map(|&t| t | s)
                .filter(|&u| u != s)
                .collect();
            for &u in &unions {
                self.required[u] += 1;
            }
            self.included[s] = true;
            self.members.push(s);
            self.decide(s + 1)?;
            self.members.pop();
            self.included[s] = false;
            for &u in &unions {
                self.required[u] -= 1;
            }
        }
        Ok(())
    }
}

/// Every topology on `n` points, built as spaces with default labels.
pub fn enumerate_topologies(n: usize, limits: &Limits) -> Result<Vec<FiniteSpace>> {
    let labels: Vec<_> = (0..n).map(default_label).collect();
    enumerate_open_families(n, limits)?
        .into_iter()
        .map(|opens| FiniteSpace::new_with_limits(labels.clone(), opens, limits))
        .collect()
}

/// Independent enumerator: every Kuratowski closure operator on `n` points,
/// returned as the open-set list of the topology it defines.
///
/// A closure operator on a finite set is additive, so it is fixed by the
/// point closures `cl{x} ∋ x`, subject to `y ∈ cl{x} ⇒ cl{y} ⊆ cl{x}`.
/// Candidates are assembled point by point under that constraint and every
/// survivor is re-checked against all four axioms on every subset.
pub fn enumerate_closure_operators(n: usize, limits: &Limits) -> Result<Vec<Vec<SubsetMask>>> {
    if n > limits.max_topology_points {
        return Err(Error::SearchSpaceTooLarge {
            what: "closure operator points",
            size: n as u128,
            limit: limits.max_topology_points as u128,
        });
    }
    let mut out = Vec::new();
    let mut bytes = 0u64;
    let mut point_closures = vec![SubsetMask::EMPTY; n];
    assign_point_closure(0, n, &mut point_closures, &mut |pc| {
        let cl = |a: SubsetMask| a.points().fold(SubsetMask::EMPTY, |acc, x| acc | pc[x]);
        let kuratowski = cl(SubsetMask::EMPTY).is_empty()
            && SubsetMask::all(n).all(|a| a.is_subset(cl(a)) && cl(cl(a)) == cl(a))
            && SubsetMask::all(n).all(|a| SubsetMask::all(n).all(|b| cl(a | b) == cl(a) | cl(b)));
        if !kuratowski {
            return Ok(());
        }
        let mut opens: Vec<SubsetMask> = SubsetMask::all(n)
            .filter(|&a| cl(a) == a)
            .map(|closed| closed.complement(n))
            .collect();
        opens.sort();
        bytes += family_bytes(&opens);
        limits.check_bytes(bytes)?;
        out.push(opens);
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

fn assign_point_closure(
    x: usize,
    n: usize,
    pc: &mut [SubsetMask],
    emit: &mut dyn FnMut(&[SubsetMask]) -> Result<()>,
) -> Result<()> {
    if x == n {
        return emit(pc);
    }
    let others = SubsetMask::full(n) - SubsetMask::singleton(x);
    for rest in others.subsets() {
        let candidate = rest | SubsetMask::singleton(x);
        // transitivity against already assigned points, both directions
        let consistent = (0..x).all(|y| {
            (!candidate.contains(y) || pc[y].is_subset(candidate))
                && (!pc[y].contains(x) || candidate.is_subset(pc[y]))
        });
        if consistent {
            pc[x] = candidate;
            assign_point_closure(x + 1, n, pc, emit)?;
        }
    }
    pc[x] = SubsetMask::EMPTY;
    Ok(())
}

/// Directed-family counts over an `n`-point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectedCount {
    /// Counting the empty family too, as the one-point table does.
    pub with_empty: u128,
    pub nonempty: u128,
}

/// Counts directed subfamilies of `P(X)` by testing every subfamily with
/// the pairwise definition.
pub fn count_directed_families(n: usize, limits: &Limits) -> Result<DirectedCount> {
    // subfamilies are u64 bitsets over the 2^n subsets
    let hard = limits.max_family_points.min(5);
    if n > hard {
        return Err(Error::SearchSpaceTooLarge {
            what: "directed family census points",
            size: n as u128,
            limit: hard as u128,
        });
    }
    let subsets = 1u32 << n;
    let families = 1u64 << subsets;
    let mut nonempty = 0u128;
    let mut members = Vec::with_capacity(subsets as usize);
    for family in 1..families {
        members.clear();
        members.extend(
            (0..subsets)
                .filter(|&s| family >> s & 1 == 1)
                .map(SubsetMask::from_bits),
        );
        if is_directed(&members) {
            nonempty += 1;
        }
    }
    Ok(DirectedCount {
        with_empty: nonempty + 1,
        nonempty,
    })
}

/// `1 + Σ_{M ⊆ X} 2^(2^|M| - 1)`: a finite family is directed iff it
/// has a greatest member `M`, and the other members are any subsets of `M`.
pub fn directed_families_closed_form(n: usize) -> Result<u128> {
    let mut total: u128 = 1;
    let mut binom: u128 = 1;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) as u128 / k as u128;
        }
        let exponent = 1u32
            .checked_shl(k as u32)
            .filter(|_| k < 32)
            .ok_or(Error::Overflow)?
            - 1;
        let term = 1u128.checked_shl(exponent).filter(|_| exponent < 128).ok_or(Error::Overflow)?;
        total = binom
            .checked_mul(term)
            .and_then(|t| total.checked_add(t))
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Iterated power: `ℶ_0(n) = n`, `ℶ_{k+1}(n) = 2^{ℶ_k(n)}`.
pub fn beth_finite(level: usize, n: u128) -> Result<u128> {
    (0..level).try_fold(n, |x, _| {
        if x >= 128 {
            Err(Error::Overflow)
        } else {
            Ok(1u128 << x)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }

    fn holds(self, lhs: u128, rhs: u128) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub label: &'static str,
    pub lhs: u128,
    pub relation: Relation,
    pub rhs: u128,
    pub holds: bool,
    /// False for informational comparisons that are reported only.
    pub asserted: bool,
}

impl InequalityCheck {
    fn new(label: &'static str, lhs: u128, relation: Relation, rhs: u128, asserted: bool) -> Self {
        InequalityCheck {
            label,
            lhs,
            relation,
            rhs,
            holds: relation.holds(lhs, rhs),
            asserted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityReport {
    pub n: usize,
    pub sigma_count: u128,
    /// Same count from the closure-operator enumerator.
    pub sigma_count_closure: u128,
    pub directed: DirectedCount,
    pub directed_closed_form: u128,
    pub two_pow_n: u128,
    pub beth2: u128,
    pub discrete_lattice_size: u128,
    /// Lattice size of every labelled topology, by enumeration index.
    pub lattice_sizes: Vec<usize>,
    pub checks: Vec<InequalityCheck>,
}

impl CardinalityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds || !c.asserted)
    }
}

/// Counts `|Σ(X)|`, `|𝒟_X|` and lattice sizes on `n` points and checks the
/// finite cardinality chain for that `n`.
pub fn check_finite_cardinalities(n: usize, limits: &Limits) -> Result<CardinalityReport> {
    let spaces = enumerate_topologies(n, limits)?;
    let closure_families = enumerate_closure_operators(n, limits)?;
    let directed = count_directed_families(n, limits)?;
    let directed_closed_form = directed_families_closed_form(n)?;
    let sigma = spaces.len() as u128;
    let sigma_closure = closure_families.len() as u128;
    let two_pow_n = 1u128 << n;
    let beth2 = beth_finite(2, n as u128)?;
    let discrete = FiniteSpace::discrete(n);
    let discrete_lattice_size = UniformLattice::build(&discrete, limits)?.len() as u128;
    let lattice_sizes = spaces
        .iter()
        .map(|s| UniformLattice::build(s, limits).map(|l| l.len()))
        .collect::<Result<Vec<_>>>()?;
    let same_families = spaces.iter().map(|s| s.opens()).eq(closure_families.iter().map(|f| &f[..]));

    use Relation::*;
    let d = directed.with_empty;
    let mut checks = vec![
        InequalityCheck::new("|Σ| open-family = |Σ| closure-operator", sigma, Eq, sigma_closure, true),
        InequalityCheck::new(
            "both enumerators list identical topologies",
            same_families as u128,
            Eq,
            1,
            true,
        ),
        InequalityCheck::new("|𝒟| exhaustive = |𝒟| closed form", d, Eq, directed_closed_form, true),
    ];
    match n {
        0 => {}
        1 => checks.extend([
            InequalityCheck::new("|Σ| < 2^n", sigma, Lt, two_pow_n, true),
            InequalityCheck::new("2^n < |𝒟|", two_pow_n, Lt, d, true),
            InequalityCheck::new("|𝒟| = ℶ₂(n)", d, Eq, beth2, true),
            InequalityCheck::new("|𝒟| nonempty = ℶ₂(n)", directed.nonempty, Eq, beth2, false),
        ]),
        _ => checks.extend([
            InequalityCheck::new("2^n <= |Σ|", two_pow_n, Le, sigma, true),
            InequalityCheck::new("|Σ| < |𝒟|", sigma, Lt, d, true),
            InequalityCheck::new("|𝒟| < ℶ₂(n)", d, Lt, beth2, true),
            InequalityCheck::new("|Σ| < |𝒟| nonempty", sigma, Lt, directed.nonempty, false),
        ]),
    }
    checks.push(InequalityCheck::new(
        "|𝒰| = 2^n (discrete)",
        discrete_lattice_size,
        Eq,
        two_pow_n,
        true,
    ));
    Ok(CardinalityReport {
        n,
        sigma_count: sigma,
        sigma_count_closure: sigma_closure,
        directed,
        directed_closed_form,
        two_pow_n,
        beth2,
        discrete_lattice_size,
        lattice_sizes,
        checks,
    })
}

/// Which spaces a lattice-isomorphism search considers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchRestriction {
    All,
    T0,
    Discrete,
}

impl SearchRestriction {
    fn admits(self, flags: &SpaceFlags) -> bool {
        match self {
            SearchRestriction::All => true,
            SearchRestriction::T0 => flags.t0,
            SearchRestriction::Discrete => flags.discrete,
        }
    }
}

/// Two non-homeomorphic spaces with isomorphic lattices.
#[derive(Debug, Clone)]
pub struct IsoFinding {
    pub left: FiniteSpace,
    pub right: FiniteSpace,
    pub left_flags: SpaceFlags,
    pub right_flags: SpaceFlags,
    pub lattice_size: usize,
    /// A lattice isomorphism `left → right`, by element index.
    pub isomorphism: Vec<usize>,
}

impl IsoFinding {
    /// Every finding involves a space that is not T1 (hence not discrete).
    pub fn non_tychonoff(&self) -> bool {
        !self.left_flags.t1 || !self.right_flags.t1
    }
}

/// One representative per homeomorphism class, first in enumeration order.
pub fn homeomorphism_representatives(
    spaces: Vec<FiniteSpace>,
    limits: &Limits,
) -> Result<Vec<FiniteSpace>> {
    let mut reps: Vec<FiniteSpace> = Vec::new();
    for space in spaces {
        let mut known = false;
        for rep in &reps {
            if !homeomorphisms(rep, &space, limits)?.is_empty() {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(space);
        }
    }
    Ok(reps)
}

/// Scans every pair of homeomorphism classes on `1..=max_n` points for
/// isomorphic lattices. Each reported pair is re-confirmed to admit no
/// homeomorphism.
pub fn search_iso_nonhomeo(
    max_n: usize,
    restriction: SearchRestriction,
    limits: &Limits,
) -> Result<Vec<IsoFinding>> {
    if max_n > limits.max_search_points {
        return Err(Error::SearchSpaceTooLarge {
            what: "isomorphism search points",
            size: max_n as u128,
            limit: limits.max_search_points as u128,
        });
    }
    let mut reps = Vec::new();
    for n in 1..=max_n {
        let admitted: Vec<FiniteSpace> = enumerate_topologies(n, limits)?
            .into_iter()
            .filter(|s| restriction.admits(&s.flags()))
            .collect();
        reps.extend(homeomorphism_representatives(admitted, limits)?);
    }
    let lattices = reps
        .iter()
        .map(|s| UniformLattice::build(s, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut findings = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let Some(isomorphism) = first_isomorphism(&lattices[i], &lattices[j]) else {
                continue;
            };
            if !homeomorphisms(&reps[i], &reps[j], limits)?.is_empty() {
                continue;
            }
            findings.push(IsoFinding {
                left: reps[i].clone(),
                right: reps[j].clone(),
                left_flags: reps[i].flags(),
                right_flags: reps[j].flags(),
                lattice_size: lattices[i].len(),
                isomorphism,
            });
        }
    }
    Ok(findings)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoDensityRow {
    pub n: usize,
    pub space_id: usize,
    pub regular_open: usize,
    pub density: usize,
    pub holds: bool,
}

/// `|RO(X)| ≤ 2^{d(X)}` on every labelled space with `0..=max_n` points.
pub fn ro_density_sweep(max_n: usize, limits: &Limits) -> Result<Vec<RoDensityRow>> {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for (space_id, space) in enumerate_topologies(n, limits)?.iter().enumerate() {
            let regular_open = space.regular_open_sets().len();
            let density = space.density();
            rows.push(RoDensityRow {
                n,
                space_id,
                regular_open,
                density,
                holds: (regular_open as u128) <= 1u128 << density,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_open_families(n, &Limits::DEFAULT).unwrap().len())
            .collect();
        assert_eq!(counts[1], 1);
        assert_eq!(counts[2], 4);
        assert_eq!(counts[3], 29);
        let closure: Vec<usize> = (0..=4)
            .map(|n| enumerate_closure_operators(n, &Limits::DEFAULT).unwrap().len())
            .collect();
        assert_eq!(counts, closure);
    }

    #[test]
    fn enumerators_agree_exactly() {
        for n in 0..=3 {
            assert_eq!(
                enumerate_open_families(n, &Limits::DEFAULT).unwrap(),
                enumerate_closure_operators(n, &Limits::DEFAULT).unwrap()
            );
        }
    }

    #[test]
    fn topology_guard() {
        let err = enumerate_topologies(6, &Limits::DEFAULT).unwrap_err();
        assert!(matches!(err, Error::SearchSpaceTooLarge { .. }));
        let tiny = Limits::DEFAULT.with_max_bytes(Some(64));
        assert_eq!(
            enumerate_open_families(3, &tiny).unwrap_err(),
            Error::MemoryBudget { limit: 64 }
        );
    }

    #[test]
    fn directed_counts() {
        let c1 = count_directed_families(1, &Limits::DEFAULT).unwrap();
        assert_eq!(c1, DirectedCount { with_empty: 4, nonempty: 3 });
        let c2 = count_directed_families(2, &Limits::DEFAULT).unwrap();
        assert_eq!(c2.with_empty, 14);
        for n in 0..=3 {
            assert_eq!(
                count_directed_families(n, &Limits::DEFAULT).unwrap().with_empty,
                directed_families_closed_form(n).unwrap()
            );
        }
        assert!(count_directed_families(5, &Limits::DEFAULT).is_err());
    }

    #[test]
    fn beth_values() {
        assert_eq!(beth_finite(0, 5).unwrap(), 5);
        assert_eq!(beth_finite(2, 2).unwrap(), 16);
        assert_eq!(beth_finite(2, 1).unwrap(), 4);
        assert_eq!(beth_finite(1, 127).unwrap(), 1 << 127);
        assert_eq!(beth_finite(1, 128).unwrap_err(), Error::Overflow);
        assert_eq!(beth_finite(3, 3).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn cardinalities_small() {
        let r1 = check_finite_cardinalities(1, &Limits::DEFAULT).unwrap();
        assert_eq!((r1.sigma_count, r1.directed.with_empty, r1.beth2), (1, 4, 4));
        assert!(r1.holds());
        let r2 = check_finite_cardinalities(2, &Limits::DEFAULT).unwrap();
        assert_eq!((r2.sigma_count, r2.directed.with_empty, r2.beth2), (4, 14, 16));
        assert!(r2.holds());
        let r3 = check_finite_cardinalities(3, &Limits::DEFAULT).unwrap();
        assert_eq!(r3.discrete_lattice_size, 8);
        assert!(r3.holds());
    }

    #[test]
    fn iso_search_witness() {
        let findings = search_iso_nonhomeo(2, SearchRestriction::All, &Limits::DEFAULT).unwrap();
        let witness = findings
            .iter()
            .find(|f| f.left.n() == 1 && f.right == FiniteSpace::indiscrete(2))
            .expect("singleton vs indiscrete pair");
        assert!(!witness.right_flags.t0);
        assert!(witness.non_tychonoff());
        assert!(search_iso_nonhomeo(3, SearchRestriction::Discrete, &Limits::DEFAULT)
            .unwrap()
            .is_empty());
        assert!(search_iso_nonhomeo(3, SearchRestriction::T0, &Limits::DEFAULT)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ro_density_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!((s.regular_open_sets().len(), s.density()), (2, 1));
        let i3 = FiniteSpace::indiscrete(3);
        assert_eq!((i3.regular_open_sets().len(), i3.density()), (2, 1));
        assert!(ro_density_sweep(3, &Limits::DEFAULT).unwrap().iter().all(|r| r.holds));
    }
}
