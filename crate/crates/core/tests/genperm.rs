mod common;

use common::{box_count, permutations, spec};
use num_bigint::BigInt;
use num_rational::BigRational;
use permuto_core::genperm::{parse_genperm_file, write_genperm_file};
use permuto_core::lp::{Lp, LpOutcome, Relation};
use permuto_core::{build_polytope, enumerate_chains, Chain, Env, Error, SubmodularSpec, Subset};
use proptest::prelude::*;

/// `min x(S)` over `P` by exact LP, shifting so variables are nonnegative.
fn lp_min(p: &SubmodularSpec, s: Subset) -> i64 {
    let n = p.n();
    let full = Subset::full(n);
    let lo: Vec<i64> = (1..=n).map(|i| p.total() - p.z(full - Subset::singleton(i))).collect();
    let mut lp = Lp::new(n);
    for t in Subset::all(n) {
        if t.is_empty() {
            continue;
        }
        let row: Vec<i64> = (1..=n).map(|i| i64::from(t.contains(i))).collect();
        let shift = t.sum_of(&lo);
        let rel = if t == full { Relation::Eq } else { Relation::Le };
        lp.constraint(&row, rel, p.z(t) - shift);
    }
    let objective: Vec<i64> = (1..=n).map(|i| i64::from(s.contains(i))).collect();
    match lp.minimize(&objective) {
        LpOutcome::Optimal { value, .. } => {
            let total = value + BigRational::from_integer(BigInt::from(s.sum_of(&lo)));
            assert!(total.is_integer());
            i64::try_from(total.to_integer()).unwrap()
        }
        other => panic!("LP gave {other:?}"),
    }
}

#[test]
fn known_lattice_counts() {
    // Hexagon with side 1 has 7 lattice points; a-th dilate has 3a^2+3a+1.
    let hexagon = build_polytope("sum(seg:1,2,seg:1,3,seg:2,3)", &Env::with_n(3)).unwrap();
    for a in 0..5u64 {
        assert_eq!(hexagon.lattice_count(a).unwrap(), (3 * a * a + 3 * a + 1) as u128);
    }
    // The standard 3-dimensional simplex: C(a+3, 3).
    let simplex = SubmodularSpec::simplex(4, Subset::full(4)).unwrap();
    for a in 0..5u64 {
        let expected = (a + 1) * (a + 2) * (a + 3) / 6;
        assert_eq!(simplex.lattice_count(a).unwrap(), expected as u128);
    }
    // The permutohedron on [4]: 16a^3 + 15a^2 + 6a + 1.
    let perm = build_polytope(
        "sum(seg:1,2,seg:1,3,seg:1,4,seg:2,3,seg:2,4,seg:3,4)",
        &Env::with_n(4),
    )
    .unwrap();
    for a in 0..4u64 {
        let expected = 16 * a.pow(3) + 15 * a * a + 6 * a + 1;
        assert_eq!(perm.lattice_count(a).unwrap(), expected as u128);
    }
}

#[test]
fn rejects_non_submodular() {
    // z({1}) + z({2}) < z({1,2}) + z(∅).
    let z = vec![0, 0, 0, 1];
    assert!(matches!(SubmodularSpec::new(2, z), Err(Error::NotSubmodular { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn greedy_vertices_lie_in_polytope(p in (1usize..=4).prop_flat_map(spec)) {
        for perm in permutations(p.n()) {
            let v = p.greedy_vertex(&perm);
            prop_assert!(p.contains_point(&v));
        }
    }

    #[test]
    fn min_of_agrees_with_lp(p in (1usize..=4).prop_flat_map(spec)) {
        for s in Subset::all(p.n()) {
            prop_assert_eq!(p.min_of(s), lp_min(&p, s));
        }
    }

    #[test]
    fn negation_is_an_involution(p in (1usize..=4).prop_flat_map(spec)) {
        prop_assert_eq!(p.neg().neg(), p.clone());
        // -P has the negated greedy vertices.
        for perm in permutations(p.n()) {
            let v: Vec<i64> = p.greedy_vertex(&perm).iter().map(|x| -x).collect();
            prop_assert!(p.neg().contains_point(&v));
        }
    }

    #[test]
    fn lattice_count_matches_box_scan(p in (1usize..=4).prop_flat_map(spec), a in 0u64..=2) {
        prop_assert_eq!(p.lattice_count(a).unwrap(), box_count(&p, a as i64));
    }

    #[test]
    fn faces_are_sub_polytopes(p in (2usize..=4).prop_flat_map(spec)) {
        let n = p.n();
        let whole = p.lattice_count(1).unwrap();
        for chain in enumerate_chains(n, 0) {
            let face = p.face(&chain);
            let count = face.lattice_count(1).unwrap();
            prop_assert!(count >= 1 && count <= whole);
            // Every face point minimizes x(S) on each chain member.
            let f = face.restricted();
            for &s in chain.sets() {
                prop_assert_eq!(f.min_of(s), p.min_of(s));
                prop_assert_eq!(f.z(s), p.min_of(s));
            }
            // Refining the chain shrinks the face.
            for t in Subset::all(n) {
                if let Some(finer) = chain.with(t) {
                    prop_assert!(p.face(&finer).lattice_count(1).unwrap() <= count);
                }
            }
        }
    }

    #[test]
    fn maximal_chain_faces_are_vertices(p in (2usize..=4).prop_flat_map(spec)) {
        let n = p.n();
        for perm in permutations(n) {
            let sets: Vec<Subset> = (1..n).map(|k| perm[..k].iter().copied().collect()).collect();
            let face = p.face(&Chain::new(n, sets).unwrap());
            prop_assert_eq!(face.dim(), 0);
            prop_assert_eq!(face.vertex(), Some(reverse_greedy(&p, &perm)));
        }
    }

    #[test]
    fn edges_are_roots(p in (2usize..=4).prop_flat_map(spec)) {
        for chain in enumerate_chains(p.n(), 0) {
            let face = p.face(&chain);
            if face.dim() == 1 {
                let (i, j) = face.edge_direction().unwrap();
                let mut varying = face.varying();
                varying.sort_unstable();
                prop_assert_eq!(varying, vec![i.min(j), i.max(j)]);
            }
        }
    }

    #[test]
    fn file_round_trip(p in (1usize..=4).prop_flat_map(spec)) {
        let text = write_genperm_file(&p);
        prop_assert_eq!(parse_genperm_file(&text).unwrap(), p);
    }

    #[test]
    fn minkowski_sum_adds_support(p in (3usize..=3).prop_flat_map(spec), q in (3usize..=3).prop_flat_map(spec)) {
        let sum = p.sum(&q).unwrap();
        for s in Subset::all(3) {
            prop_assert_eq!(sum.z(s), p.z(s) + q.z(s));
            prop_assert_eq!(sum.min_of(s), p.min_of(s) + q.min_of(s));
        }
    }
}

/// The vertex minimizing `x(S_1), x(S_2), ...` along the prefixes of `perm`.
fn reverse_greedy(p: &SubmodularSpec, perm: &[usize]) -> Vec<i64> {
    let mut x = vec![0; p.n()];
    let mut prefix = Subset::EMPTY;
    for &e in perm {
        let next = prefix.insert(e);
        x[e - 1] = p.min_of(next) - p.min_of(prefix);
        prefix = next;
    }
    x
}
