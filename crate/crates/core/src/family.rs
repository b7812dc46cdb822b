//! Directed families of point subsets and the order calculus on them.
//!
//! A family `α` stands for the class `C_α`. Two families are compared with
//! the closure criterion: `C_α ≤ C_β` iff every member of `α` lies inside
//! the closure of some member of `β`. On a finite space every directed
//! family has a greatest member, so each class is named by a single closed
//! set, the normal form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::mask::SubsetMask;
use crate::space::{FiniteSpace, PointMap};

/// Nonempty and every two members are covered by a third.
pub fn is_directed(members: &[SubsetMask]) -> bool {
    directedness_witness(members).is_ok() && !members.is_empty()
}

fn directedness_witness(members: &[SubsetMask]) -> Result<()> {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            let ab = a | b;
            if !members.iter().any(|e| ab.is_subset(*e)) {
                return Err(Error::NotDirected { a, b });
            }
        }
    }
    Ok(())
}

fn same_space(a: &FiniteSpace, b: &FiniteSpace) -> Result<()> {
    if core::ptr::eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

/// A directed family over a fixed space. Members are deduplicated and
/// sorted by mask value.
#[derive(Debug, Clone)]
pub struct DirectedFamily<'s> {
    space: &'s FiniteSpace,
    members: Vec<SubsetMask>,
}

impl PartialEq for DirectedFamily<'_> {
    /// Member-set equality. Class equality is [`DirectedFamily::equiv`].
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.members == other.members
    }
}

impl<'s> DirectedFamily<'s> {
    pub fn new<I>(space: &'s FiniteSpace, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        let members: Vec<SubsetMask> = members
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(bad) = members.iter().find(|m| !m.fits(space.n())) {
            return Err(Error::MaskOutOfRange(*bad));
        }
        directedness_witness(&members)?;
        Ok(DirectedFamily { space, members })
    }

    /// Skips the directedness check; callers guarantee it.
    fn from_sorted_unchecked(space: &'s FiniteSpace, members: BTreeSet<SubsetMask>) -> Self {
        let family = DirectedFamily {
            space,
            members: members.into_iter().collect(),
        };
        debug_assert!(is_directed(&family.members));
        family
    }

    pub fn space(&self) -> &'s FiniteSpace {
        self.space
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    /// The member containing all others. Exists for every finite
    /// directed family; sorted storage puts it last.
    pub fn greatest(&self) -> SubsetMask {
        let top = *self.members.last().expect("directed families are nonempty");
        debug_assert!(self.members.iter().all(|m| m.is_subset(top)));
        top
    }

    /// Closed set naming the class of this family.
    pub fn normal_form(&self) -> LatticeElement<'s> {
        LatticeElement {
            space: self.space,
            canon: self.space.closure(self.greatest()),
        }
    }

    /// `C_self ≤ C_other`, evaluated member by member.
    pub fn leq(&self, other: &DirectedFamily<'_>) -> Result<bool> {
        same_space(self.space, other.space)?;
        let closures: Vec<SubsetMask> = other
            .members
            .iter()
            .map(|&b| self.space.closure(b))
            .collect();
        Ok(self
            .members
            .iter()
            .all(|a| closures.iter().any(|cb| a.is_subset(*cb))))
    }

    /// Same relation as [`leq`](Self::leq), read off the normal forms.
    pub fn leq_by_canon(&self, other: &DirectedFamily<'_>) -> Result<bool> {
        same_space(self.space, other.space)?;
        Ok(self
            .normal_form()
            .canon
            .is_subset(self.space.closure(other.greatest())))
    }

    pub fn equiv(&self, other: &DirectedFamily<'_>) -> Result<bool> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// `{A ∪ B : A ∈ α, B ∈ β}`
    pub fn join(&self, other: &DirectedFamily<'_>) -> Result<DirectedFamily<'s>> {
        same_space(self.space, other.space)?;
        let members = self
            .members
            .iter()
            .flat_map(|&a| other.members.iter().map(move |&b| a | b))
            .collect();
        Ok(Self::from_sorted_unchecked(self.space, members))
    }

    /// `{cl A ∩ cl B : A ∈ α, B ∈ β}`
    pub fn meet(&self, other: &DirectedFamily<'_>) -> Result<DirectedFamily<'s>> {
        same_space(self.space, other.space)?;
        let space = self.space;
        let members = self
            .members
            .iter()
            .flat_map(|&a| {
                other
                    .members
                    .iter()
                    .map(move |&b| space.closure(a) & space.closure(b))
            })
            .collect();
        Ok(Self::from_sorted_unchecked(self.space, members))
    }

    /// True when the union of the members is dense.
    pub fn hausdorff_flag(&self) -> bool {
        let union = self
            .members
            .iter()
            .fold(SubsetMask::EMPTY, |acc, m| acc | *m);
        self.space.closure(union) == self.space.full()
    }

    /// `f*α = {f[A] : A ∈ α}`, a family over `f`'s target.
    pub fn pushforward<'t>(&self, f: &PointMap<'t>) -> Result<DirectedFamily<'t>> {
        same_space(self.space, f.source())?;
        let members = self.members.iter().map(|&a| f.image(a)).collect();
        Ok(DirectedFamily::from_sorted_unchecked(f.target(), members))
    }
}

/// `{∅}`, the class `C_∅`.
pub fn gen_bottom(space: &FiniteSpace) -> DirectedFamily<'_> {
    DirectedFamily::from_sorted_unchecked(space, [SubsetMask::EMPTY].into())
}

/// All finite subsets, the class `C_p`.
pub fn gen_p(space: &FiniteSpace) -> DirectedFamily<'_> {
    DirectedFamily::from_sorted_unchecked(space, SubsetMask::all(space.n()).collect())
}

/// `{X}`, the class `C_u`.
pub fn gen_u(space: &FiniteSpace) -> DirectedFamily<'_> {
    DirectedFamily::from_sorted_unchecked(space, [space.full()].into())
}

/// `{{x}}`, the class `C_x`.
pub fn gen_point(space: &FiniteSpace, x: usize) -> Result<DirectedFamily<'_>> {
    if x >= space.n() {
        return Err(Error::PointOutOfRange(x));
    }
    Ok(gen_set_unchecked(space, SubsetMask::singleton(x)))
}

/// `{A}`, the class `C_A`.
pub fn gen_set(space: &FiniteSpace, a: SubsetMask) -> Result<DirectedFamily<'_>> {
    if !a.fits(space.n()) {
        return Err(Error::MaskOutOfRange(a));
    }
    Ok(gen_set_unchecked(space, a))
}

fn gen_set_unchecked(space: &FiniteSpace, a: SubsetMask) -> DirectedFamily<'_> {
    DirectedFamily::from_sorted_unchecked(space, [a].into())
}

/// Supremum of any number of classes: all unions of finitely many members
/// drawn from the given families (the empty union included).
pub fn sup_many<'s>(
    space: &'s FiniteSpace,
    families: &[DirectedFamily<'_>],
) -> Result<DirectedFamily<'s>> {
    for family in families {
        same_space(space, family.space)?;
    }
    let mut unions: BTreeSet<SubsetMask> = [SubsetMask::EMPTY].into();
    for m in families.iter().flat_map(|f| f.members.iter().copied()) {
        let grown: Vec<SubsetMask> = unions.iter().map(|&u| u | m).collect();
        unions.extend(grown);
    }
    Ok(DirectedFamily::from_sorted_unchecked(space, unions))
}

/// How [`inf_many`] builds the infimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfMode {
    /// Replace each family by its normal form first; one choice function.
    Canonical,
    /// Run over every choice function, intersecting member closures.
    /// Partial intersections are deduplicated after each family, and the
    /// number of examined tuples is bounded by `Limits::max_choice_tuples`.
    Verbatim,
}

/// Infimum of any number of classes. The empty list gives `{X}`, the class
/// `C_u`.
pub fn inf_many<'s>(
    space: &'s FiniteSpace,
    families: &[DirectedFamily<'_>],
    mode: InfMode,
    limits: &Limits,
) -> Result<DirectedFamily<'s>> {
    for family in families {
        same_space(space, family.space)?;
    }
    let mut partial: BTreeSet<SubsetMask> = [space.full()].into();
    let mut examined: u128 = 0;
    for family in families {
        let choices: Vec<SubsetMask> = match mode {
            InfMode::Canonical => alloc::vec![family.normal_form().canon],
            InfMode::Verbatim => family.members.iter().map(|&m| space.closure(m)).collect(),
        };
        examined += partial.len() as u128 * choices.len() as u128;
        limits.check("choice tuples", examined, limits.max_choice_tuples)?;
        partial = partial
            .iter()
            .flat_map(|&p| choices.iter().map(move |&c| p & c))
            .collect();
    }
    Ok(DirectedFamily::from_sorted_unchecked(space, partial))
}

/// A class of directed families, named by its closed normal form.
#[derive(Debug, Clone, Copy)]
pub struct LatticeElement<'s> {
    space: &'s FiniteSpace,
    canon: SubsetMask,
}

impl PartialEq for LatticeElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon && self.space == other.space
    }
}

impl Eq for LatticeElement<'_> {}

impl<'s> LatticeElement<'s> {
    pub fn of_closed(space: &'s FiniteSpace, canon: SubsetMask) -> Result<Self> {
        if !canon.fits(space.n()) || !space.is_closed(canon) {
            return Err(Error::MaskOutOfRange(canon));
        }
        Ok(LatticeElement { space, canon })
    }

    pub fn canon(&self) -> SubsetMask {
        self.canon
    }

    pub fn space(&self) -> &'s FiniteSpace {
        self.space
    }

    /// `{canon}`, a representative family.
    pub fn generator(&self) -> DirectedFamily<'s> {
        gen_set_unchecked(self.space, self.canon)
    }
}
