//! JSON space and family files, lattice dumps, DOT and text summaries.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use unitop_core::lattice::HypothesisNote;
use unitop_core::{DirectedFamily, FiniteSpace, Limits, SpaceFlags, SubsetMask, UniformLattice};

use crate::AppError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    points: Vec<String>,
    #[serde(default)]
    opens: Option<Vec<Vec<String>>>,
    #[serde(default)]
    preorder: Option<Vec<Vec<bool>>>,
}

/// `{"points": [...], "opens": [[...], ...]}` or
/// `{"points": [...], "preorder": [[bool, ...], ...]}`.
pub fn parse_space(text: &str, limits: &Limits) -> Result<FiniteSpace, AppError> {
    let file: SpaceFile = serde_json::from_str(text)
        .map_err(|e| AppError::Input(format!("malformed space file: {e}")))?;
    let space = match (file.opens, file.preorder) {
        (Some(opens), None) => {
            FiniteSpace::from_labeled_opens_with_limits(&file.points, &opens, limits)?
        }
        (None, Some(relation)) => {
            FiniteSpace::from_preorder_with_limits(file.points, &relation, limits)?
        }
        _ => {
            return Err(AppError::Input(
                "space file needs exactly one of `opens` or `preorder`".into(),
            ))
        }
    };
    Ok(space)
}

#[derive(Debug, Serialize)]
struct SpaceOut<'a> {
    points: &'a [String],
    opens: Vec<Vec<&'a str>>,
}

/// Space file with opens in ascending mask order.
pub fn space_to_json(space: &FiniteSpace) -> String {
    let out = SpaceOut {
        points: space.labels(),
        opens: space.opens().iter().map(|&m| space.labels_of(m)).collect(),
    };
    serde_json::to_string_pretty(&out).expect("plain data serializes")
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    members: Vec<Vec<String>>,
}

/// `{"members": [["a"], ["a", "b"]]}`, labels resolved against `space`.
pub fn parse_family<'s>(text: &str, space: &'s FiniteSpace) -> Result<DirectedFamily<'s>, AppError> {
    let file: FamilyFile = serde_json::from_str(text)
        .map_err(|e| AppError::Input(format!("malformed family file: {e}")))?;
    let members = file
        .members
        .iter()
        .map(|m| space.mask_from_labels(m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DirectedFamily::new(space, members)?)
}

/// `{a, b}`; the empty set is `{}`.
pub fn set_label(space: &FiniteSpace, mask: SubsetMask) -> String {
    format!("{{{}}}", space.labels_of(mask).join(", "))
}

fn label_lists(space: &FiniteSpace, masks: impl IntoIterator<Item = SubsetMask>) -> Vec<Vec<String>> {
    masks
        .into_iter()
        .map(|m| space.labels_of(m).into_iter().map(String::from).collect())
        .collect()
}

#[derive(Debug, Serialize)]
pub struct LatticeDump {
    /// Canon (closed set) of each element, by index.
    pub elements: Vec<Vec<String>>,
    pub leq_matrix: Vec<Vec<bool>>,
    pub atoms: Vec<usize>,
    /// Complementary pairs `[i, j]` with `i <= j`.
    pub complemented: Vec<[usize; 2]>,
    pub c: usize,
    pub pi: usize,
    pub hasse: Vec<[usize; 2]>,
}

pub fn lattice_dump(lattice: &UniformLattice<'_>) -> Result<LatticeDump, AppError> {
    let space = lattice.space();
    let k = lattice.len();
    Ok(LatticeDump {
        elements: label_lists(space, lattice.elements().iter().copied()),
        leq_matrix: (0..k)
            .map(|i| (0..k).map(|j| lattice.leq(i, j)).collect())
            .collect(),
        atoms: lattice.atoms(),
        complemented: lattice
            .complemented_pairs()
            .into_iter()
            .map(|(i, j)| [i, j])
            .collect(),
        c: lattice.cellularity()?,
        pi: lattice.pi_density()?,
        hasse: lattice.hasse().into_iter().map(|(i, j)| [i, j]).collect(),
    })
}

/// Hasse diagram, bottom at the bottom.
pub fn hasse_dot(lattice: &UniformLattice<'_>) -> String {
    let space = lattice.space();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, &canon) in lattice.elements().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", set_label(space, canon));
    }
    for (lo, hi) in lattice.hasse() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagsOut {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub discrete: bool,
    pub zero_dimensional: bool,
}

impl From<SpaceFlags> for FlagsOut {
    fn from(f: SpaceFlags) -> Self {
        FlagsOut {
            t0: f.t0,
            t1: f.t1,
            hausdorff: f.hausdorff,
            discrete: f.discrete,
            zero_dimensional: f.zero_dimensional,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LatticeSummary {
    pub size: usize,
    pub atoms: Vec<Vec<String>>,
    pub complemented: Vec<Vec<String>>,
    pub is_boolean: bool,
    /// Finite analogue: largest family of positive elements with pairwise
    /// bottom meets.
    pub cellularity: usize,
    /// Finite analogue: smallest set of positive elements below every
    /// positive element.
    pub pi_density: usize,
    /// Departures from the discrete-space values, if any.
    pub hypothesis_notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SpaceSummary {
    pub points: Vec<String>,
    pub flags: FlagsOut,
    /// `o(X)`, the number of open sets.
    pub open_count: usize,
    pub closed_sets: Vec<Vec<String>>,
    pub clopen_sets: Vec<Vec<String>>,
    pub regular_open_sets: Vec<Vec<String>>,
    /// Finite analogue: fewest points with dense union.
    pub density: usize,
    pub lattice: LatticeSummary,
}

pub fn note_text(note: &HypothesisNote) -> String {
    match note {
        HypothesisNote::AtomsNotPointClasses { atoms, points } => {
            format!("atoms are not the {points} point classes ({atoms} atoms)")
        }
        HypothesisNote::CardinalFunctionsDiffer {
            cellularity,
            pi_density,
            points,
        } => format!("c = {cellularity}, pi = {pi_density}, differ from |X| = {points}"),
        HypothesisNote::NotBoolean => "lattice is not Boolean".to_string(),
    }
}

pub fn summarize(space: &FiniteSpace, limits: &Limits) -> Result<SpaceSummary, AppError> {
    let lattice = UniformLattice::build(space, limits)?;
    let canon = |idx: Vec<usize>| label_lists(space, idx.into_iter().map(|i| lattice.canon(i)));
    Ok(SpaceSummary {
        points: space.labels().to_vec(),
        flags: space.flags().into(),
        open_count: space.open_count(),
        closed_sets: label_lists(space, space.closed_sets()),
        clopen_sets: label_lists(space, space.clopen_sets()),
        regular_open_sets: label_lists(space, space.regular_open_sets()),
        density: space.density(),
        lattice: LatticeSummary {
            size: lattice.len(),
            atoms: canon(lattice.atoms()),
            complemented: canon(lattice.complemented_elements()),
            is_boolean: lattice.is_boolean(),
            cellularity: lattice.cellularity()?,
            pi_density: lattice.pi_density()?,
            hypothesis_notes: lattice.hypothesis_notes()?.iter().map(note_text).collect(),
        },
    })
}

fn set_list(sets: &[Vec<String>]) -> String {
    sets.iter()
        .map(|s| format!("{{{}}}", s.join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn summary_text(s: &SpaceSummary) -> String {
    let f = &s.flags;
    let l = &s.lattice;
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", s.points.join(" "));
    let _ = writeln!(
        out,
        "flags: T0={} T1={} hausdorff={} discrete={} zero_dimensional={}",
        f.t0, f.t1, f.hausdorff, f.discrete, f.zero_dimensional
    );
    let _ = writeln!(out, "open sets (o): {}", s.open_count);
    let _ = writeln!(out, "closed sets: {}", set_list(&s.closed_sets));
    let _ = writeln!(out, "clopen sets: {}", set_list(&s.clopen_sets));
    let _ = writeln!(out, "regular open sets: {}", set_list(&s.regular_open_sets));
    let _ = writeln!(out, "density (d, finite analogue): {}", s.density);
    let _ = writeln!(out, "lattice size: {}", l.size);
    let _ = writeln!(out, "atoms ({}): {}", l.atoms.len(), set_list(&l.atoms));
    let _ = writeln!(out, "complemented: {}", set_list(&l.complemented));
    let _ = writeln!(out, "boolean: {}", l.is_boolean);
    let _ = writeln!(out, "cellularity c (finite analogue): {}", l.cellularity);
    let _ = writeln!(out, "pi-density (finite analogue): {}", l.pi_density);
    for note in &l.hypothesis_notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
