//! Randomized algebraic invariants: exact linear algebra, polynomial
//! division, real-root bounds, and digraph symmetries.

use proptest::prelude::*;

use swr::algebra::{Int, IntMatrix, IntPoly, RatPoly};
use swr::census::canonical_key;
use swr::digraph::Digraph;
use swr::engine;

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1..=5usize).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            IntMatrix::from_fn(n, n, |i, j| Int::from(bits[i * n + j] as i64))
        })
    })
}

fn digraph() -> impl Strategy<Value = Digraph> {
    (2..=5usize).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Digraph::from_adjacency(n, |u, v| u != v && bits[u * n + v]).unwrap()
        })
    })
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(-9i64..=9, 1..=6)
        .prop_map(|c| IntPoly::from_i64(&c).to_rat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(a in int_matrix()) {
        let p = a.char_poly().unwrap();
        let z = p.eval_matrix(&a).unwrap();
        prop_assert!(z.entries().iter().all(|e| e == &Int::from(0)));
    }

    #[test]
    fn minpoly_divides_charpoly(a in int_matrix()) {
        let m = a.min_poly().unwrap();
        let c = a.char_poly().unwrap();
        prop_assert!(c.div_exact(&m).is_some());
        // and the minimal polynomial annihilates the matrix
        let z = m.eval_matrix(&a).unwrap();
        prop_assert!(z.entries().iter().all(|e| e == &Int::from(0)));
    }

    #[test]
    fn divrem_reconstructs(a in rat_poly(), b in rat_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert!(a.sub(&q.mul(&b)).sub(&r).is_zero());
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < b.degree().unwrap());
        }
    }

    #[test]
    fn trinomial_real_root_bound(l in 2usize..=9, e in -20i64..=20, f in -20i64..=20) {
        // x^l + e x + f
        let mut c = vec![0i64; l + 1];
        c[0] = f;
        c[1] += e;
        c[l] += 1;
        let p = IntPoly::from_i64(&c);
        let count = p.real_root_count(true).unwrap();
        prop_assert!(count <= 3);
        if l % 2 == 0 {
            prop_assert!(count <= 2);
        }
    }

    #[test]
    fn matrix_power_is_iterated_product(a in int_matrix(), i in 0usize..=3, j in 0usize..=3) {
        let lhs = a.pow(i).unwrap().mul(&a.pow(j).unwrap()).unwrap();
        let rhs = a.pow(i + j).unwrap();
        prop_assert_eq!(lhs.entries(), rhs.entries());
    }

    #[test]
    fn exponent_set_reverse_symmetry(g in digraph()) {
        let es = engine::exponent_set(&g, 8).unwrap();
        let er = engine::exponent_set(&g.reverse(), 8).unwrap();
        prop_assert_eq!(es.values(), er.values());
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant(
        (g, perm) in digraph().prop_flat_map(|g| {
            let n = g.n();
            Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |p| (g.clone(), p))
        })
    ) {
        let h = Digraph::from_adjacency(g.n(), |u, v| g.has_edge(perm[u], perm[v])).unwrap();
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }
}
