//! Property suite: polynomial basis machinery, operator normal forms, and
//! representation invariance on randomized instances.

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sl2fd_core::exactpoly::{falling_factorial, rat, rat_int, Basis, Poly, Rat};
use sl2fd_core::opalg::{realize, DiffOp, HeisenbergRep, OpExpr, Operator, ShiftOp};
use sl2fd_core::solvable::fock_matrix_invariance;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..8).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rat(), 0..=max_len)
        .prop_map(|coeffs| Poly::from_coeffs(coeffs, Basis::Monomial))
}

fn test_deltas() -> [Rat; 4] {
    [rat_int(1), rat(1, 2), rat(-2, 3), rat_int(5)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn change_basis_roundtrip(p in arb_poly(31)) {
        for delta in test_deltas() {
            let falling = Basis::falling(delta);
            let there = p.change_basis(&falling);
            prop_assert_eq!(there.change_basis(&Basis::Monomial), p.clone());
        }
    }

    #[test]
    fn umbral_map_is_linear(
        p in arb_poly(12),
        q in arb_poly(12),
        alpha in arb_rat(),
        beta in arb_rat(),
    ) {
        for delta in test_deltas() {
            let combo = p.scalar_mul(&alpha).add(&q.scalar_mul(&beta));
            let lhs = combo.umbral_map(&delta).unwrap();
            let rhs = p
                .umbral_map(&delta)
                .unwrap()
                .scalar_mul(&alpha)
                .add(&q.umbral_map(&delta).unwrap().scalar_mul(&beta));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shift_roundtrip(p in arb_poly(12), c in arb_rat()) {
        let back = p.shift(&c).unwrap().shift(&(-c)).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn divrem_reconstructs(p in arb_poly(10), d in arb_poly(5)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divrem(&d).unwrap();
        prop_assert_eq!(d.mul(&q).unwrap().add(&r), p);
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < d.degree().unwrap());
        }
    }
}

#[test]
fn falling_factorials_monic_and_vanishing_up_to_30() {
    for delta in test_deltas() {
        for k in 0..=30usize {
            let ff = falling_factorial(k, &delta);
            assert_eq!(ff.degree(), Some(k));
            assert!(ff.is_monic());
            for i in 0..k {
                assert!(ff.eval(&(rat_int(i as i64) * &delta)).is_zero());
            }
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    Poly::from_coeffs((0..len).map(|_| random_rat(rng)).collect(), Basis::Monomial)
}

fn random_shift_op(rng: &mut ChaCha8Rng, delta: &Rat) -> ShiftOp {
    let mut op = ShiftOp::zero(delta.clone());
    for _ in 0..rng.gen_range(1..=3) {
        op.add_term(rng.gen_range(-2..=2), random_poly(rng, 2));
    }
    op
}

fn random_diff_op(rng: &mut ChaCha8Rng) -> DiffOp {
    let order = rng.gen_range(0..=3);
    DiffOp::from_coeffs((0..=order).map(|_| random_poly(rng, 2)).collect())
}

/// Random word of at most `max_len` leaves in the generators a, b.
fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> OpExpr {
    let len = rng.gen_range(1..=max_len);
    let mut expr: Option<OpExpr> = None;
    for _ in 0..len {
        let leaf = match rng.gen_range(0..4) {
            0 => OpExpr::a(),
            1 => OpExpr::b(),
            2 => OpExpr::scalar(random_rat(rng)),
            _ => OpExpr::smul(random_rat(rng), OpExpr::b()),
        };
        expr = Some(match expr {
            None => leaf,
            Some(e) => {
                if rng.gen_bool(0.5) {
                    e + leaf
                } else {
                    e * leaf
                }
            }
        });
    }
    expr.unwrap()
}

#[test]
fn shift_compose_normal_form_sound_200_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let delta = rat(rng.gen_range(-5..=5).max(1), rng.gen_range(1..=3));
        let l1 = random_shift_op(&mut rng, &delta);
        let l2 = random_shift_op(&mut rng, &delta);
        let composed = l1.compose(&l2).unwrap();
        let p = random_poly(&mut rng, 10);
        assert_eq!(composed.apply(&p), l1.apply(&l2.apply(&p)));
    }
}

#[test]
fn diff_compose_normal_form_sound_200_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let d1 = random_diff_op(&mut rng);
        let d2 = random_diff_op(&mut rng);
        let composed = d1.compose(&d2);
        let p = random_poly(&mut rng, 10);
        assert_eq!(composed.apply(&p), d1.apply(&d2.apply(&p)));
    }
}

#[test]
fn realize_is_ring_homomorphism_50_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let reps = [
        HeisenbergRep::Differential,
        HeisenbergRep::difference(rat_int(1)),
        HeisenbergRep::difference(rat(1, 2)),
    ];
    for _ in 0..50 {
        let x = random_word(&mut rng, 3);
        let y = random_word(&mut rng, 3);
        for rep in &reps {
            let product = realize(&(x.clone() * y.clone()), rep);
            let sequential = realize(&x, rep).compose(&realize(&y, rep)).unwrap();
            let sum = realize(&(x.clone() + y.clone()), rep);
            let added = realize(&x, rep).add(&realize(&y, rep)).unwrap();
            for k in 0..=12usize {
                let p = Poly::x_pow(k);
                assert_eq!(product.apply(&p), sequential.apply(&p));
                assert_eq!(sum.apply(&p), added.apply(&p));
            }
        }
    }
}

#[test]
fn delta_reflection_of_divided_differences() {
    for delta in test_deltas() {
        let reflected = ShiftOp::d_plus(-delta.clone());
        assert_eq!(reflected.canonical(), ShiftOp::d_minus(delta).canonical());
    }
}

#[test]
fn matrix_functoriality_on_degree_preserving_ops() {
    use sl2fd_core::opalg::matrix_in_basis;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let delta = rat(1, 2);
    for _ in 0..50 {
        // degree non-increasing shift operators: coefficients chosen so each
        // term p_s(x) E^s has deg p_s = 0 (or the J0-like x(1 - E^{-1}) shape)
        let j0 = ShiftOp::term(delta.clone(), 0, Poly::x())
            .sub(&ShiftOp::term(delta.clone(), -1, Poly::x()))
            .unwrap();
        let scalar = ShiftOp::scalar(delta.clone(), random_rat(&mut rng));
        let l1 = j0.scalar_mul(&random_rat(&mut rng)).add(&scalar).unwrap();
        let l2 = ShiftOp::d_plus(delta.clone()).scalar_mul(&random_rat(&mut rng));
        let composed = Operator::Shift(l1.compose(&l2).unwrap());
        let m12 = matrix_in_basis(&composed, &Basis::Monomial, 8).unwrap();
        let m1 = matrix_in_basis(&Operator::Shift(l1), &Basis::Monomial, 8).unwrap();
        let m2 = matrix_in_basis(&Operator::Shift(l2), &Basis::Monomial, 8).unwrap();
        assert_eq!(m12, m1.mul(&m2));
    }
}

#[test]
fn representation_invariance_50_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..50 {
        let word = random_word(&mut rng, 6);
        for delta in [rat_int(1), rat(1, 2), rat(-2, 3)] {
            assert!(fock_matrix_invariance(&word, &delta, 12));
        }
    }
}
