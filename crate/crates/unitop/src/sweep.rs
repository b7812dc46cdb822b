//! The `check-paper` sweep: every checker over every enumerated space,
//! family, map and isomorphism up to a point bound.
//!
//! Each proposition id accumulates holds/fails/recorded counts. Failures
//! are kept (up to a cap) as full records; recorded verdicts, which fall
//! outside the checker's hypothesis class, keep a few samples.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use unitop_core::census::{
    check_finite_cardinalities, enumerate_topologies, search_iso_nonhomeo, SearchRestriction,
};
use unitop_core::family::{gen_bottom, gen_p, gen_set, gen_u, inf_many, is_directed, sup_many};
use unitop_core::functor::{
    check_clopen_transfer, check_continuity_equiv, check_injective_open_equiv, check_onto_equiv,
    embedding_from_subspace, extract_point_map, induced_relation, isomorphisms,
    roundtrip_zero_dim, EquivalenceReport, HypothesisClass,
};
use unitop_core::lattice::LatticeLaw;
use unitop_core::space::{all_maps, homeomorphisms};
use unitop_core::{
    DirectedFamily, Error, FiniteSpace, InfMode, LatticeMap, Limits, PointMap, SubsetMask,
    UniformLattice, Verdict,
};

use crate::formats::{set_label, FlagsOut};
use crate::AppError;

/// Family-level checks enumerate every directed family, so they stop here.
pub const FAMILY_SWEEP_POINTS: usize = 3;
/// Map-level checks (including composable pairs) stop here.
pub const MAP_SWEEP_POINTS: usize = 3;
const FAILURES_PER_PROPOSITION: usize = 25;
const SAMPLES_PER_PROPOSITION: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Break one meet-table entry of every lattice with three or more
    /// elements before the lattice laws are checked.
    MeetTable,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_points: usize,
    pub limits: Limits,
    pub fault: Option<Fault>,
}

impl SweepOptions {
    pub fn new(max_points: usize) -> Self {
        SweepOptions {
            max_points,
            limits: Limits::DEFAULT,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub proposition_id: &'static str,
    pub instance: String,
    pub hypothesis_class: &'static str,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionSummary {
    pub id: &'static str,
    pub hypothesis_class: &'static str,
    pub instances: u64,
    pub holds: u64,
    pub fails: u64,
    pub recorded: u64,
    /// Recorded instances where the claim would have failed had it been
    /// asserted.
    pub recorded_disagree: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpaceOut {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl From<&FiniteSpace> for SpaceOut {
    fn from(s: &FiniteSpace) -> Self {
        SpaceOut {
            points: s.labels().to_vec(),
            opens: s
                .opens()
                .iter()
                .map(|&m| s.labels_of(m).into_iter().map(String::from).collect())
                .collect(),
        }
    }
}

/// Non-homeomorphic spaces whose lattices are isomorphic.
#[derive(Debug, Clone, Serialize)]
pub struct FindingOut {
    pub left: SpaceOut,
    pub right: SpaceOut,
    pub left_flags: FlagsOut,
    pub right_flags: FlagsOut,
    pub lattice_size: usize,
    pub non_t0: bool,
    pub caveat: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct PaperReport {
    pub max_points: usize,
    pub family_sweep_points: usize,
    pub map_sweep_points: usize,
    /// Labelled topologies checked, by point count.
    pub spaces_per_size: Vec<usize>,
    pub propositions: Vec<PropositionSummary>,
    pub failures: Vec<Record>,
    pub recorded_samples: Vec<Record>,
    pub findings: Vec<FindingOut>,
    pub fault_injected: Option<&'static str>,
    pub passed: bool,
}

impl PaperReport {
    pub fn failing_propositions(&self) -> Vec<&PropositionSummary> {
        self.propositions.iter().filter(|p| p.fails > 0).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Default)]
struct Entry {
    class: &'static str,
    holds: u64,
    fails: u64,
    recorded: u64,
    disagree: u64,
    failures: Vec<Record>,
    samples: Vec<Record>,
}

#[derive(Debug, Default)]
struct Tally {
    entries: BTreeMap<&'static str, Entry>,
}

type Detail = (String, Value, Value);

impl Tally {
    fn entry(&mut self, id: &'static str, class: HypothesisClass) -> &mut Entry {
        self.entries.entry(id).or_insert_with(|| Entry {
            class: class.name(),
            ..Entry::default()
        })
    }

    fn verdict(
        &mut self,
        id: &'static str,
        class: HypothesisClass,
        verdict: Verdict,
        agrees: bool,
        detail: impl FnOnce() -> Detail,
    ) {
        let e = self.entry(id, class);
        let keep = match verdict {
            Verdict::Holds => {
                e.holds += 1;
                false
            }
            Verdict::Fails => {
                e.fails += 1;
                e.failures.len() < FAILURES_PER_PROPOSITION
            }
            Verdict::Recorded => {
                e.recorded += 1;
                if !agrees {
                    e.disagree += 1;
                }
                !agrees && e.samples.len() < SAMPLES_PER_PROPOSITION
            }
        };
        if keep {
            let (instance, lhs, rhs) = detail();
            let record = Record {
                proposition_id: id,
                instance,
                hypothesis_class: e.class,
                lhs,
                rhs,
                verdict: verdict.name(),
            };
            match verdict {
                Verdict::Fails => e.failures.push(record),
                _ => e.samples.push(record),
            }
        }
    }

    /// Asserted when `met`, recorded otherwise.
    fn gated(
        &mut self,
        id: &'static str,
        class: HypothesisClass,
        met: bool,
        ok: bool,
        detail: impl FnOnce() -> Detail,
    ) {
        let verdict = match (met, ok) {
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
            (false, _) => Verdict::Recorded,
        };
        self.verdict(id, class, verdict, ok, detail);
    }

    fn assert(&mut self, id: &'static str, ok: bool, detail: impl FnOnce() -> Detail) {
        self.gated(id, HypothesisClass::All, true, ok, detail);
    }

    fn equivalence(&mut self, r: &EquivalenceReport, instance: impl FnOnce() -> String) {
        self.verdict(r.proposition.id(), r.hypothesis, r.verdict, r.lhs == r.rhs, || {
            (instance(), json!(r.lhs), json!(r.rhs))
        });
    }

    fn merge(&mut self, other: Tally) {
        for (id, o) in other.entries {
            let e = self.entries.entry(id).or_insert_with(|| Entry {
                class: o.class,
                ..Entry::default()
            });
            e.holds += o.holds;
            e.fails += o.fails;
            e.recorded += o.recorded;
            e.disagree += o.disagree;
            let room = FAILURES_PER_PROPOSITION.saturating_sub(e.failures.len());
            e.failures.extend(o.failures.into_iter().take(room));
            let room = SAMPLES_PER_PROPOSITION.saturating_sub(e.samples.len());
            e.samples.extend(o.samples.into_iter().take(room));
        }
    }

    fn merged(parts: Vec<Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.merge(t);
            acc
        })
    }
}

/// A space in the sweep: `n#id` is its position in the enumeration.
struct Item<'s> {
    id: String,
    space: &'s FiniteSpace,
    lattice: UniformLattice<'s>,
    /// All directed families, when `n` is within the family bound.
    families: Vec<DirectedFamily<'s>>,
}

fn describe(id: &str, s: &FiniteSpace) -> String {
    let opens: Vec<String> = s.opens().iter().map(|&m| set_label(s, m)).collect();
    format!("{id} opens=[{}]", opens.join(", "))
}

fn map_desc(x: &Item<'_>, y: &Item<'_>, table: &[usize]) -> String {
    format!("{} -> {} {:?}", x.id, y.id, table)
}

pub fn check_paper(opts: &SweepOptions) -> Result<PaperReport, AppError> {
    let limits = &opts.limits;
    let k = opts.max_points;
    let by_size = (0..=k)
        .map(|n| enumerate_topologies(n, limits))
        .collect::<Result<Vec<_>, _>>()?;
    let spaces: Vec<(String, &FiniteSpace)> = by_size
        .iter()
        .enumerate()
        .flat_map(|(n, list)| {
            list.iter()
                .enumerate()
                .map(move |(i, s)| (format!("{n}#{i}"), s))
        })
        .collect();
    let items = spaces
        .par_iter()
        .map(|(id, s)| -> Result<Item<'_>, Error> {
            Ok(Item {
                id: id.clone(),
                space: s,
                lattice: UniformLattice::build(s, limits)?,
                families: if s.n() <= FAMILY_SWEEP_POINTS {
                    all_directed_families(s)?
                } else {
                    Vec::new()
                },
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let per_space = items
        .par_iter()
        .map(|item| -> Result<Tally, Error> {
            let mut t = Tally::default();
            space_checks(&mut t, item);
            lattice_checks(&mut t, item, opts)?;
            if item.space.n() <= FAMILY_SWEEP_POINTS {
                family_checks(&mut t, item)?;
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut tally = Tally::merged(per_space);

    let small: Vec<&Item<'_>> = items
        .iter()
        .filter(|i| i.space.n() <= MAP_SWEEP_POINTS)
        .collect();
    tally.merge(map_checks(&small, limits)?);
    tally.merge(functoriality_checks(&small, limits)?);
    tally.merge(iso_checks(&small, limits)?);
    tally.merge(census_checks(k, limits)?);
    let (search_tally, findings) = search_checks(k, limits)?;
    tally.merge(search_tally);

    let mut propositions = Vec::new();
    let mut failures = Vec::new();
    let mut recorded_samples = Vec::new();
    for (id, e) in tally.entries {
        propositions.push(PropositionSummary {
            id,
            hypothesis_class: e.class,
            instances: e.holds + e.fails + e.recorded,
            holds: e.holds,
            fails: e.fails,
            recorded: e.recorded,
            recorded_disagree: e.disagree,
        });
        failures.extend(e.failures);
        recorded_samples.extend(e.samples);
    }
    let passed = propositions.iter().all(|p| p.fails == 0);
    Ok(PaperReport {
        max_points: k,
        family_sweep_points: FAMILY_SWEEP_POINTS.min(k),
        map_sweep_points: MAP_SWEEP_POINTS.min(k),
        spaces_per_size: by_size.iter().map(Vec::len).collect(),
        propositions,
        failures,
        recorded_samples,
        findings,
        fault_injected: opts.fault.map(|Fault::MeetTable| "meet-table"),
        passed,
    })
}

/// Every nonempty directed subfamily of `P(X)`, in bitset order.
fn all_directed_families(s: &FiniteSpace) -> Result<Vec<DirectedFamily<'_>>, Error> {
    let subsets: Vec<SubsetMask> = SubsetMask::all(s.n()).collect();
    let mut out = Vec::new();
    let mut members = Vec::new();
    for pick in 1u64..1 << subsets.len() {
        members.clear();
        members.extend((0..subsets.len()).filter(|&i| pick >> i & 1 == 1).map(|i| subsets[i]));
        if is_directed(&members) {
            out.push(DirectedFamily::new(s, members.iter().copied())?);
        }
    }
    Ok(out)
}

fn space_checks(t: &mut Tally, item: &Item<'_>) {
    let s = item.space;
    let n = s.n();
    let desc = || describe(&item.id, s);
    let cl = |a| s.closure(a);
    let kuratowski = cl(SubsetMask::EMPTY).is_empty()
        && SubsetMask::all(n).all(|a| {
            a.is_subset(cl(a))
                && cl(cl(a)) == cl(a)
                && SubsetMask::all(n).all(|b| cl(a | b) == cl(a) | cl(b))
        });
    t.assert("space.kuratowski", kuratowski, || (desc(), json!(kuratowski), json!(true)));
    let duality = SubsetMask::all(n).all(|a| s.interior(a) == cl(a.complement(n)).complement(n));
    t.assert("space.interior-duality", duality, || (desc(), json!(duality), json!(true)));
    let f = s.flags();
    let hd = f.hausdorff == f.discrete && f.t1 == f.discrete;
    t.assert("space.hausdorff-iff-discrete", hd, || {
        (desc(), json!([f.t1, f.hausdorff]), json!(f.discrete))
    });
    let roundtrip = FiniteSpace::from_preorder(s.labels().to_vec(), &s.specialization())
        .map(|p| p == *s)
        .unwrap_or(false);
    t.assert("space.preorder-roundtrip", roundtrip, || {
        (desc(), json!(roundtrip), json!(true))
    });
    let (ro, d) = (s.regular_open_sets().len(), s.density());
    t.assert("space.ro-density", (ro as u128) <= 1u128 << d, || {
        (desc(), json!(ro), json!(1u128 << d))
    });
}

fn law_id(law: LatticeLaw) -> &'static str {
    match law {
        LatticeLaw::PartialOrder => "lattice.partial-order",
        LatticeLaw::JoinIsLeastUpperBound => "lattice.join-is-lub",
        LatticeLaw::MeetIsGreatestLowerBound => "lattice.meet-is-glb",
        LatticeLaw::Commutativity => "lattice.commutativity",
        LatticeLaw::Associativity => "lattice.associativity",
        LatticeLaw::Idempotence => "lattice.idempotence",
        LatticeLaw::Absorption => "lattice.absorption",
        LatticeLaw::Bounded => "lattice.bounded",
        LatticeLaw::Distributivity => "lattice.distributivity",
    }
}

fn lattice_checks(t: &mut Tally, item: &Item<'_>, opts: &SweepOptions) -> Result<(), Error> {
    let s = item.space;
    let n = s.n();
    let desc = || describe(&item.id, s);
    let mut corrupted;
    let l = match opts.fault {
        Some(Fault::MeetTable) => {
            corrupted = item.lattice.clone();
            corrupted.corrupt_meet_table();
            &corrupted
        }
        None => &item.lattice,
    };
    let violated = l.violated_laws();
    for law in LatticeLaw::ALL {
        let ok = !violated.contains(&law);
        t.assert(law_id(law), ok, || (desc(), json!(ok), json!(true)));
    }
    let k = l.len();
    let tables_ok = (0..k).all(|i| {
        (0..k).all(|j| {
            l.brute_sup(&[i, j]).ok() == Some(l.join(i, j))
                && l.brute_inf(&[i, j]).ok() == Some(l.meet(i, j))
        })
    });
    t.assert("lattice.tables-match-brute-bounds", tables_ok, || {
        (desc(), json!(tables_ok), json!(true))
    });

    let closed = s.closed_sets();
    let order_ok = l.len() == closed.len()
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let (a, b) = (gen_set(s, l.canon(i)), gen_set(s, l.canon(j)));
                matches!((a, b), (Ok(a), Ok(b)) if a.leq(&b) == Ok(l.leq(i, j)))
            })
        });
    t.assert("lattice.elements-are-closed-sets", order_ok, || {
        (desc(), json!(l.len()), json!(closed.len()))
    });

    let complemented = l.complemented_elements();
    let clopen = l.clopen_elements();
    t.assert("lattice.complemented-iff-clopen", complemented == clopen, || {
        (desc(), json!(complemented), json!(clopen))
    });
    let (c, pi) = (l.cellularity()?, l.pi_density()?);
    t.assert("lattice.c-le-pi", c <= pi, || (desc(), json!(c), json!(pi)));

    let discrete = s.flags().discrete;
    let atoms = l.atoms();
    let point_classes: Vec<usize> = (0..n)
        .map(|x| l.class_of_set(SubsetMask::singleton(x)))
        .collect();
    let profile = (l.len() as u128) == 1u128 << n
        && atoms.len() == n
        && atoms.iter().all(|a| point_classes.contains(a))
        && c == n
        && pi == n
        && l.is_boolean();
    t.gated(
        "lattice.discrete-profile",
        HypothesisClass::Discrete,
        discrete,
        profile,
        || {
            (
                desc(),
                json!({"size": l.len(), "atoms": atoms.len(), "c": c, "pi": pi, "boolean": l.is_boolean()}),
                json!({"size": 1u128 << n, "atoms": n, "c": n, "pi": n, "boolean": true}),
            )
        },
    );

    for subset in SubsetMask::all(n).filter(|m| !m.is_empty()) {
        let r = embedding_from_subspace(s, subset, &opts.limits)?;
        t.assert("functor.subspace-embedding", r.holds(), || {
            (
                format!("{} subset {}", item.id, set_label(s, subset)),
                json!(r.subspace_lattice_size),
                json!(r.lattice_size),
            )
        });
    }

    if n <= FAMILY_SWEEP_POINTS {
        completeness_checks(t, item, &opts.limits)?;
    }
    Ok(())
}

/// `sup_many`/`inf_many` against the brute-force bounds on every subset
/// of elements, and against iterated binary join/meet on short lists.
fn completeness_checks(t: &mut Tally, item: &Item<'_>, limits: &Limits) -> Result<(), Error> {
    let s = item.space;
    let l = &item.lattice;
    let k = l.len();
    // each element as the family of all subsets of its canon
    let rich = (0..k)
        .map(|i| DirectedFamily::new(s, l.canon(i).subsets()))
        .collect::<Result<Vec<_>, _>>()?;
    let singles = (0..k)
        .map(|i| gen_set(s, l.canon(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut ok = true;
    let mut first_bad = None;
    for pick in 0u64..1 << k {
        let subset: Vec<usize> = (0..k).filter(|&i| pick >> i & 1 == 1).collect();
        let fams: Vec<DirectedFamily<'_>> = subset.iter().map(|&i| rich[i].clone()).collect();
        let sup = l.class_of(&sup_many(s, &fams)?)?;
        let inf_v = l.class_of(&inf_many(s, &fams, InfMode::Verbatim, limits)?)?;
        let inf_c = l.class_of(&inf_many(s, &fams, InfMode::Canonical, limits)?)?;
        let good = l.brute_sup(&subset).ok() == Some(sup)
            && l.brute_inf(&subset).ok() == Some(inf_v)
            && inf_v == inf_c;
        if !good && first_bad.is_none() {
            first_bad = Some(subset);
        }
        ok &= good;
    }
    t.assert("lattice.complete", ok, || {
        (describe(&item.id, s), json!(first_bad), json!(null))
    });

    let mut lists_ok = true;
    for len in 1..=4u32 {
        for code in 0..(k as u64).pow(len) {
            let list: Vec<usize> = (0..len)
                .map(|p| (code / (k as u64).pow(p) % k as u64) as usize)
                .collect();
            let fams: Vec<DirectedFamily<'_>> = list.iter().map(|&i| singles[i].clone()).collect();
            let mut join = fams[0].clone();
            let mut meet = fams[0].clone();
            for f in &fams[1..] {
                join = join.join(f)?;
                meet = meet.meet(f)?;
            }
            lists_ok &= l.class_of(&join)? == l.class_of(&sup_many(s, &fams)?)?
                && l.class_of(&meet)? == l.class_of(&inf_many(s, &fams, InfMode::Canonical, limits)?)?;
        }
    }
    t.assert("family.sup-inf-match-iterated", lists_ok, || {
        (describe(&item.id, s), json!(lists_ok), json!(true))
    });
    Ok(())
}

fn family_checks(t: &mut Tally, item: &Item<'_>) -> Result<(), Error> {
    let s = item.space;
    let l = &item.lattice;
    let fams = &item.families;
    let m = fams.len();
    let desc = || describe(&item.id, s);
    let index: HashMap<&[SubsetMask], usize> =
        fams.iter().enumerate().map(|(i, f)| (f.members(), i)).collect();
    let words = m.div_ceil(64);
    let mut up = vec![vec![0u64; words]; m];
    let mut down = vec![vec![0u64; words]; m];
    for i in 0..m {
        for j in 0..m {
            if fams[i].leq(&fams[j])? {
                up[i][j / 64] |= 1 << (j % 64);
                down[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let leq = |i: usize, j: usize| up[i][j / 64] >> (j % 64) & 1 == 1;
    let classes: Vec<usize> = fams.iter().map(|f| l.class_of(f)).collect::<Result<_, _>>()?;
    let pair_desc = |i: usize, j: usize| {
        format!(
            "{} alpha={:?} beta={:?}",
            item.id,
            fams[i].members(),
            fams[j].members()
        )
    };

    for i in 0..m {
        let canon_family = gen_set(s, fams[i].normal_form().canon())?;
        let witness = fams[i].equiv(&canon_family)?;
        let hausdorff = fams[i].hausdorff_flag() == fams[i].equiv(&gen_u(s))?;
        t.assert("family.normal-form-witness", witness && leq(i, i), || {
            (pair_desc(i, i), json!(witness), json!(true))
        });
        t.assert("family.hausdorff-iff-dense", hausdorff, || {
            (pair_desc(i, i), json!(fams[i].hausdorff_flag()), json!(!hausdorff))
        });
        for j in 0..m {
            let lij = leq(i, j);
            let transitive = !lij || up[j].iter().zip(&up[i]).all(|(b, a)| b & !a == 0);
            t.assert("family.preorder", transitive, || {
                (pair_desc(i, j), json!(lij), json!(transitive))
            });
            let by_canon = fams[i].leq_by_canon(&fams[j])?;
            let equiv = lij && leq(j, i);
            let same_canon = classes[i] == classes[j];
            let normal = lij == by_canon && equiv == same_canon && l.leq(classes[i], classes[j]) == lij;
            t.assert("family.normal-form", normal, || {
                (pair_desc(i, j), json!([lij, equiv]), json!([by_canon, same_canon]))
            });

            let join = fams[i].join(&fams[j])?;
            let meet = fams[i].meet(&fams[j])?;
            let bounds = match (index.get(join.members()), index.get(meet.members())) {
                (Some(&a), Some(&b)) => {
                    is_directed(join.members())
                        && is_directed(meet.members())
                        && up[a].iter().zip(up[i].iter().zip(&up[j])).all(|(x, (p, q))| *x == p & q)
                        && down[b].iter().zip(down[i].iter().zip(&down[j])).all(|(x, (p, q))| *x == p & q)
                        && classes[a] == l.join(classes[i], classes[j])
                        && classes[b] == l.meet(classes[i], classes[j])
                }
                _ => false,
            };
            t.assert("family.join-meet-bounds", bounds, || {
                (pair_desc(i, j), json!(format!("{:?}", join.members())), json!(format!("{:?}", meet.members())))
            });
        }
        let id_map = PointMap::identity(s);
        let same = fams[i].pushforward(&id_map).map(|p| p == fams[i]).unwrap_or(false);
        t.assert("family.pushforward-identity", same, || {
            (pair_desc(i, i), json!(same), json!(true))
        });
    }

    let generators = gen_p(s).equiv(&gen_u(s))?
        && gen_bottom(s).normal_form().canon().is_empty()
        && gen_u(s).normal_form().canon() == s.full();
    t.assert("family.generators", generators, || {
        (desc(), json!(generators), json!(true))
    });
    Ok(())
}

fn map_checks(items: &[&Item<'_>], limits: &Limits) -> Result<Tally, AppError> {
    let parts = items
        .par_iter()
        .map(|x| -> Result<Tally, Error> {
            let mut t = Tally::default();
            let lx = &x.lattice;
            let identity = induced_relation(&PointMap::identity(x.space), lx, lx)?;
            let expected = LatticeMap::from_table(lx, lx, &(0..lx.len()).collect::<Vec<_>>())?;
            t.assert("functor.identity", identity == expected, || {
                (x.id.clone(), json!(identity.pairs()), json!(expected.pairs()))
            });
            for y in items {
                let ly = &y.lattice;
                for f in all_maps(x.space, y.space, limits)? {
                    let desc = || map_desc(x, y, f.table());
                    t.equivalence(&check_continuity_equiv(&f, lx, ly)?, desc);
                    t.equivalence(&check_injective_open_equiv(&f, lx, ly)?, desc);
                    t.equivalence(&check_onto_equiv(&f, lx, ly)?, desc);
                    let phi = induced_relation(&f, lx, ly)?;
                    let mut ok = true;
                    for alpha in &x.families {
                        let pushed = alpha.pushforward(&f)?;
                        let pair = (lx.class_of(alpha)?, ly.class_of(&pushed)?);
                        ok &= is_directed(pushed.members()) && phi.pairs().binary_search(&pair).is_ok();
                    }
                    t.assert("family.pushforward-classes", ok, || {
                        (desc(), json!(ok), json!(true))
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tally::merged(parts))
}

/// A point map with its subset images and induced relation as bitsets.
struct CompactMap {
    table: Vec<usize>,
    image: Vec<SubsetMask>,
    relation: Vec<u64>,
    continuous: bool,
}

fn compact_maps<'s>(
    x: &Item<'s>,
    y: &Item<'s>,
    limits: &Limits,
) -> Result<Vec<CompactMap>, Error> {
    Ok(all_maps(x.space, y.space, limits)?
        .into_iter()
        .map(|f| {
            let image: Vec<SubsetMask> = SubsetMask::all(x.space.n()).map(|a| f.image(a)).collect();
            let mut relation = vec![0u64; x.lattice.len()];
            for (bits, &b) in image.iter().enumerate() {
                let a = SubsetMask::from_bits(bits as u32);
                relation[x.lattice.class_of_set(a)] |= 1 << y.lattice.class_of_set(b);
            }
            CompactMap {
                table: f.table().to_vec(),
                image,
                relation,
                continuous: f.is_continuous(),
            }
        })
        .collect())
}

/// `φ_{g∘f}` against `φ_g ∘ φ_f` for every composable pair, asserted when
/// `g` is continuous.
fn functoriality_checks(items: &[&Item<'_>], limits: &Limits) -> Result<Tally, AppError> {
    const ID: &str = "functor.functoriality";
    let maps: Vec<Vec<Vec<CompactMap>>> = items
        .iter()
        .map(|x| {
            items
                .iter()
                .map(|y| compact_maps(x, y, limits))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let parts: Vec<Tally> = (0..items.len())
        .into_par_iter()
        .map(|yi| {
            let mut t = Tally::default();
            let (mut holds, mut recorded, mut disagree) = (0u64, 0u64, 0u64);
            for (xi, x) in items.iter().enumerate() {
                for (zi, z) in items.iter().enumerate() {
                    for f in &maps[xi][yi] {
                        for g in &maps[yi][zi] {
                            let mut direct = vec![0u64; x.lattice.len()];
                            for (bits, &fa) in f.image.iter().enumerate() {
                                let a = SubsetMask::from_bits(bits as u32);
                                direct[x.lattice.class_of_set(a)] |=
                                    1 << z.lattice.class_of_set(g.image[fa.bits() as usize]);
                            }
                            let equal = f.relation.iter().zip(&direct).all(|(&fr, &d)| {
                                let mut composite = 0u64;
                                let mut rest = fr;
                                while rest != 0 {
                                    composite |= g.relation[rest.trailing_zeros() as usize];
                                    rest &= rest - 1;
                                }
                                composite == d
                            });
                            match (g.continuous, equal) {
                                (true, true) => holds += 1,
                                (false, _) => {
                                    recorded += 1;
                                    disagree += u64::from(!equal);
                                }
                                (true, false) => t.verdict(ID, HypothesisClass::All, Verdict::Fails, false, || {
                                    (
                                        format!(
                                            "{} -> {} -> {} f={:?} g={:?}",
                                            x.id, items[yi].id, z.id, f.table, g.table
                                        ),
                                        json!(equal),
                                        json!(true),
                                    )
                                }),
                            }
                        }
                    }
                }
            }
            let e = t.entry(ID, HypothesisClass::All);
            e.holds += holds;
            e.recorded += recorded;
            e.disagree += disagree;
            t
        })
        .collect();
    Ok(Tally::merged(parts))
}

fn iso_checks(items: &[&Item<'_>], limits: &Limits) -> Result<Tally, AppError> {
    let parts = items
        .par_iter()
        .map(|x| -> Result<Tally, Error> {
            let mut t = Tally::default();
            let lx = &x.lattice;
            let fx = x.space.flags();
            for y in items.iter().filter(|y| y.lattice.len() == lx.len()) {
                let ly = &y.lattice;
                let fy = y.space.flags();
                let t0 = fx.t0 && fy.t0;
                for phi in isomorphisms(lx, ly, limits)? {
                    let desc = || format!("{} -> {} phi={:?}", x.id, y.id, phi.as_table());
                    let extracted = extract_point_map(&phi);
                    let ok = match &extracted {
                        Ok(f) => f.is_homeomorphism() && induced_relation(f, lx, ly)? == phi,
                        Err(_) => false,
                    };
                    t.gated("functor.iso-extraction", HypothesisClass::T0Both, t0, ok, || {
                        let lhs = match &extracted {
                            Ok(f) => json!(f.table()),
                            Err(e) => json!(e.to_string()),
                        };
                        (desc(), lhs, json!(ok))
                    });
                    let transfer = check_clopen_transfer(&phi);
                    let ok = transfer.as_ref().is_ok_and(|r| r.holds());
                    t.gated("functor.clopen-transfer", HypothesisClass::T0Both, t0, ok, || {
                        let lhs = match &transfer {
                            Ok(r) => json!(r.clopens_transfer),
                            Err(e) => json!(e.to_string()),
                        };
                        (desc(), lhs, json!(ok))
                    });
                    if fx.zero_dimensional && fy.zero_dimensional {
                        let r = roundtrip_zero_dim(&phi);
                        let ok = r.as_ref().is_ok_and(|r| r.holds());
                        t.gated(
                            "functor.zero-dim-roundtrip",
                            HypothesisClass::Discrete,
                            fx.discrete && fy.discrete,
                            ok,
                            || {
                                let lhs = match &r {
                                    Ok(r) => json!(r.map),
                                    Err(e) => json!(e.to_string()),
                                };
                                (desc(), lhs, json!(ok))
                            },
                        );
                    }
                }
                for h in homeomorphisms(x.space, y.space, limits)? {
                    let phi = induced_relation(&h, lx, ly)?;
                    let back = extract_point_map(&phi).map(|f| f.table().to_vec());
                    let ok = phi.is_isomorphism() && back.as_deref() == Ok(h.table());
                    t.gated("functor.homeomorphism-cycle", HypothesisClass::T0Both, t0, ok, || {
                        (
                            format!("{} -> {} h={:?}", x.id, y.id, h.table()),
                            json!(back.map_err(|e| e.to_string())),
                            json!(h.table()),
                        )
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tally::merged(parts))
}

fn census_checks(k: usize, limits: &Limits) -> Result<Tally, AppError> {
    let mut t = Tally::default();
    for n in 0..=k.min(limits.max_family_points) {
        let r = check_finite_cardinalities(n, limits)?;
        for c in &r.checks {
            let detail = || (format!("n={n}: {}", c.label), json!(c.lhs), json!(c.rhs));
            if c.asserted {
                t.assert("census.cardinality", c.holds, detail);
            } else {
                t.verdict("census.cardinality", HypothesisClass::All, Verdict::Recorded, c.holds, detail);
            }
        }
    }
    Ok(t)
}

fn search_checks(k: usize, limits: &Limits) -> Result<(Tally, Vec<FindingOut>), AppError> {
    let mut t = Tally::default();
    let max_n = k.min(limits.max_search_points);
    let findings = search_iso_nonhomeo(max_n, SearchRestriction::All, limits)?;
    let mut out = Vec::new();
    for f in &findings {
        let instance = || {
            format!(
                "{} vs {}",
                describe(&format!("{}pt", f.left.n()), &f.left),
                describe(&format!("{}pt", f.right.n()), &f.right)
            )
        };
        t.assert("search.witness-non-tychonoff", f.non_tychonoff(), || {
            (instance(), json!([f.left_flags.t1, f.right_flags.t1]), json!(false))
        });
        out.push(FindingOut {
            left: (&f.left).into(),
            right: (&f.right).into(),
            left_flags: f.left_flags.into(),
            right_flags: f.right_flags.into(),
            lattice_size: f.lattice_size,
            non_t0: !f.left_flags.t0 || !f.right_flags.t0,
            caveat: "surrogate lattices only; a witness involves a non-Tychonoff space",
        });
    }
    for (id, restriction, class) in [
        ("search.t0-rigidity", SearchRestriction::T0, HypothesisClass::T0Both),
        ("search.discrete-rigidity", SearchRestriction::Discrete, HypothesisClass::Discrete),
    ] {
        let found = search_iso_nonhomeo(max_n, restriction, limits)?.len();
        t.gated(id, class, true, found == 0, || {
            (format!("spaces up to {max_n} points"), json!(found), json!(0))
        });
    }
    Ok((t, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_two_points() {
        let r = check_paper(&SweepOptions::new(2)).unwrap();
        assert!(r.passed, "{:#?}", r.failures);
        assert_eq!(r.spaces_per_size, vec![1, 1, 4]);
        let ids: Vec<&str> = r.propositions.iter().map(|p| p.id).collect();
        for id in [
            "functor.continuity",
            "functor.injective-open",
            "functor.onto",
            "functor.functoriality",
            "lattice.distributivity",
            "lattice.complete",
            "family.join-meet-bounds",
            "census.cardinality",
        ] {
            assert!(ids.contains(&id), "{id}");
        }
        assert!(r.findings.iter().any(|f| f.non_t0 && f.lattice_size == 2));
    }

    #[test]
    fn fault_is_caught() {
        let mut opts = SweepOptions::new(2);
        opts.fault = Some(Fault::MeetTable);
        let r = check_paper(&opts).unwrap();
        assert!(!r.passed);
        assert!(r
            .failing_propositions()
            .iter()
            .any(|p| p.id == "lattice.distributivity"));
    }
}
