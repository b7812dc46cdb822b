use unitop_core::census::enumerate_topologies;
use unitop_core::family::is_directed;
use unitop_core::functor::induced_relation;
use unitop_core::space::all_maps;
use unitop_core::{DirectedFamily, FiniteSpace, Limits, PointMap, SubsetMask, UniformLattice};

fn spaces(max_n: usize) -> Vec<FiniteSpace> {
    (0..=max_n)
        .flat_map(|n| enumerate_topologies(n, &Limits::DEFAULT).unwrap())
        .collect()
}

fn directed_families(n: usize) -> Vec<Vec<SubsetMask>> {
    let subsets: Vec<SubsetMask> = SubsetMask::all(n).collect();
    (1u64..1u64 << subsets.len())
        .map(|pick| {
            subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect::<Vec<_>>()
        })
        .filter(|f| is_directed(f))
        .collect()
}

#[test]
fn kuratowski_axioms_and_duality() {
    for s in spaces(4) {
        let full = s.full();
        assert_eq!(s.closure(SubsetMask::EMPTY), SubsetMask::EMPTY);
        for a in SubsetMask::all(s.n()) {
            let ca = s.closure(a);
            assert!(a.is_subset(ca));
            assert_eq!(s.closure(ca), ca);
            assert!(s.is_closed(ca));
            assert_eq!(s.interior(a), full - s.closure(full - a));
            for b in SubsetMask::all(s.n()) {
                assert_eq!(s.closure(a | b), ca | s.closure(b));
            }
        }
    }
}

#[test]
fn preorder_roundtrip() {
    for s in spaces(4) {
        let back = FiniteSpace::from_preorder(s.labels().to_vec(), &s.specialization()).unwrap();
        assert_eq!(back.opens(), s.opens());
    }
}

#[test]
fn leq_matches_canon_comparison() {
    for s in spaces(2) {
        let fams = directed_families(s.n());
        let fams: Vec<DirectedFamily<'_>> = fams
            .into_iter()
            .map(|f| DirectedFamily::new(&s, f).unwrap())
            .collect();
        for a in &fams {
            for b in &fams {
                assert_eq!(a.leq(b).unwrap(), a.leq_by_canon(b).unwrap());
            }
        }
    }
}

// Pushes every directed family forward, not only singletons.
#[test]
fn induced_relation_over_all_families() {
    let all = spaces(2);
    for x in &all {
        let lx = UniformLattice::build(x, &Limits::DEFAULT).unwrap();
        let fams = directed_families(x.n());
        for y in &all {
            let ly = UniformLattice::build(y, &Limits::DEFAULT).unwrap();
            for f in all_maps(x, y, &Limits::DEFAULT).unwrap() {
                let mut full: Vec<(usize, usize)> = fams
                    .iter()
                    .map(|m| {
                        let alpha = DirectedFamily::new(x, m.iter().copied()).unwrap();
                        let pushed = alpha.pushforward(&f).unwrap();
                        (lx.class_of(&alpha).unwrap(), ly.class_of(&pushed).unwrap())
                    })
                    .collect();
                full.sort();
                full.dedup();
                let rel = induced_relation(&f, &lx, &ly).unwrap();
                assert_eq!(rel.pairs(), &full[..], "{:?}", f.table());
            }
        }
    }
}

#[test]
fn sierpinski_specialization() {
    let s = FiniteSpace::sierpinski();
    let id = PointMap::identity(&s);
    assert!(id.is_homeomorphism());
    let l = UniformLattice::build(&s, &Limits::DEFAULT).unwrap();
    assert_eq!(l.len(), 3);
    assert_eq!(l.atoms().len(), 1);
}
