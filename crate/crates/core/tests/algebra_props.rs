use m4cyclic::gf2e::{nth_root, F16};
use m4cyclic::poly::{factor_xn_minus_1, hat, F16Poly};
use m4cyclic::rring::{
    bachoc_phi, lee_weight, psi, psi_inv, r_conj, tables, theta, theta_inv, ConjMode, MatForm, RElem, E, OMEGA, V,
};
use proptest::prelude::*;

/// Carry-less product reduced by x^4 + x + 1, bit by bit.
fn clmul_mod(a: u8, b: u8) -> u8 {
    let mut acc: u16 = 0;
    for i in 0..4 {
        if b >> i & 1 == 1 {
            acc ^= (a as u16) << i;
        }
    }
    for bit in (4..8).rev() {
        if acc >> bit & 1 == 1 {
            acc ^= 0b10011 << (bit - 4);
        }
    }
    acc as u8
}

fn f16() -> impl Strategy<Value = F16> {
    (0u8..16).prop_map(F16::from_bits)
}

fn poly(max_len: usize) -> impl Strategy<Value = F16Poly> {
    prop::collection::vec(f16(), 0..max_len).prop_map(F16Poly::new)
}

fn relem(k: usize) -> impl Strategy<Value = RElem> {
    any::<u128>().prop_map(move |b| RElem::from_bits(k, b))
}

fn k_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    f: impl Fn(usize) -> S + Clone + 'static,
) -> impl Strategy<Value = (usize, T)> {
    (1usize..=4).prop_flat_map(move |k| (Just(k), f(k)))
}

#[test]
fn field_matches_clmul_and_exponents() {
    for a in 0..16u8 {
        for b in 0..16u8 {
            assert_eq!((F16::from_bits(a) * F16::from_bits(b)).bits(), clmul_mod(a, b));
        }
    }
    for s in 0..15u64 {
        for t in 0..15u64 {
            assert_eq!(F16::pow_w(s) * F16::pow_w(t), F16::pow_w((s + t) % 15));
        }
    }
    assert_eq!(F16::W.pow(4), F16::W + F16::ONE);
    assert!((1..15).all(|e| F16::W.pow(e) != F16::ONE));
    for a in F16::all() {
        assert_eq!(a.conj().conj(), a);
        if !a.is_zero() {
            assert_eq!(a * a.pow(14), F16::ONE);
            assert_eq!(a.inv(), Some(a.pow(14)));
        }
    }
}

#[test]
fn nth_roots_have_exact_order() {
    for n in [1usize, 3, 5, 7, 9, 11, 13, 15, 17, 21] {
        let (field, rho) = nth_root(n).unwrap();
        assert_eq!(field.pow(&rho, n as u128), field.one(), "n={n}");
        for d in 1..n {
            if n % d == 0 {
                assert_ne!(field.pow(&rho, d as u128), field.one(), "n={n} d={d}");
            }
        }
    }
}

#[test]
fn factorizations_multiply_back_and_are_coprime() {
    for n in (1..=33).step_by(2) {
        let fs = factor_xn_minus_1(n).unwrap();
        assert_eq!(fs.product(), F16Poly::xn_minus_1(n), "n={n}");
        for (i, f) in fs.factors.iter().enumerate() {
            assert!(f.is_irreducible(), "n={n} {f}");
            assert_eq!(hat(f, n).unwrap().mul(f), F16Poly::xn_minus_1(n));
            for g in &fs.factors[i + 1..] {
                assert!(f.gcd(g).is_one());
            }
        }
        let again = factor_xn_minus_1(n).unwrap();
        assert_eq!(fs, again, "factor order must be stable");
    }
}

#[test]
fn basis_constants() {
    let i = m4cyclic::rring::Mat4F2::IDENTITY;
    assert_eq!(E.pow(4), i);
    assert_eq!(V.pow(4), m4cyclic::rring::Mat4F2::ZERO);
    assert_eq!(OMEGA.pow(15), i);
    assert_ne!(OMEGA.pow(5), i);
    assert_ne!(OMEGA.pow(3), i);
    for k in 1..=4 {
        assert_eq!(tables(k).unwrap().rank(), 16 * k);
    }
}

#[test]
fn u_and_v_commute_and_are_nilpotent() {
    for k in 1..=4 {
        let (u, v) = (RElem::u(k), RElem::v(k));
        assert_eq!(u * v, v * u);
        assert!(u.pow(k as u32).is_zero());
        assert!(v.pow(4).is_zero());
        assert!(!v.pow(3).is_zero());
    }
}

#[test]
fn bachoc_map_is_bijective() {
    for k in 1..=4 {
        let images: Vec<u128> = (0..16 * k)
            .map(|b| {
                bachoc_phi(&RElem::from_bits(k, 1 << b))
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, m)| acc | (m.0 as u128) << (16 * i))
            })
            .collect();
        assert_eq!(m4cyclic::linalg::gf2_rank(&images), 16 * k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn poly_degree_is_additive(f in poly(8), g in poly(8)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(f.mul(&g).deg().unwrap(), f.deg().unwrap() + g.deg().unwrap());
    }

    #[test]
    fn poly_conj_is_an_involutive_homomorphism(f in poly(8), g in poly(8)) {
        prop_assert_eq!(f.conj().conj(), f.clone());
        prop_assert_eq!(f.mul(&g).conj(), f.conj().mul(&g.conj()));
        prop_assert_eq!(f.add(&g).conj(), f.conj().add(&g.conj()));
    }

    #[test]
    fn reciprocal_is_an_involution(f in poly(8)) {
        prop_assume!(!f.coeff(0).is_zero());
        prop_assert_eq!(f.reciprocal().reciprocal(), f.clone());
        prop_assert_eq!(f.reciprocal_monic().reciprocal_monic(), f.monic());
    }

    #[test]
    fn div_rem_reconstructs(f in poly(10), d in poly(5)) {
        prop_assume!(!d.is_zero());
        let (q, r) = f.div_rem(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), f);
        prop_assert!(r.is_zero() || r.deg() < d.deg());
    }

    #[test]
    fn psi_round_trips((_k, a) in k_and(relem)) {
        prop_assert_eq!(psi(&psi_inv(&a)), a);
        let m = psi_inv(&a);
        prop_assert_eq!(psi_inv(&psi(&m)), m);
    }

    #[test]
    fn psi_is_a_ring_map((_k, (a, b)) in k_and(|k| (relem(k), relem(k)))) {
        prop_assert_eq!(psi_inv(&(a + b)), psi_inv(&a).add(&psi_inv(&b)));
        prop_assert_eq!(psi_inv(&(a * b)), psi_inv(&a).mul(&psi_inv(&b)));
    }

    #[test]
    fn ring_is_associative_and_distributive((k, (a, b, c)) in k_and(|k| (relem(k), relem(k), relem(k)))) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!(a * RElem::one(k), a);
    }

    #[test]
    fn matform_product_matches_ring((_k, (a, b)) in k_and(|k| (relem(k), relem(k)))) {
        let p: MatForm = psi_inv(&a).mul(&psi_inv(&b));
        prop_assert_eq!(psi(&p), a * b);
    }

    #[test]
    fn theta_is_right_linear((k, (a, b, l)) in k_and(|k| (relem(k), relem(k), f16()))) {
        prop_assert_eq!(theta_inv(k, &theta(&a)), a);
        let sum: Vec<F16> = theta(&a).iter().zip(theta(&b)).map(|(x, y)| *x + y).collect();
        prop_assert_eq!(theta(&(a + b)), sum);
        let scaled: Vec<F16> = theta(&a).iter().map(|x| *x * l).collect();
        prop_assert_eq!(theta(&(a * RElem::scalar(k, l))), scaled);
    }

    #[test]
    fn lee_distance_is_hamming_of_images((_k, (a, b)) in k_and(|k| (relem(k), relem(k)))) {
        let ham = theta(&a).iter().zip(theta(&b)).filter(|(x, y)| **x != *y).count() as u32;
        prop_assert_eq!(lee_weight(&(a + b)), ham);
    }

    #[test]
    fn bachoc_map_is_additive((_k, (a, b)) in k_and(|k| (relem(k), relem(k)))) {
        let lhs = bachoc_phi(&(a + b));
        let rhs: Vec<_> = bachoc_phi(&a).iter().zip(bachoc_phi(&b)).map(|(x, y)| x.add(y)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_conj_is_additive_and_involutive((_k, (a, b)) in k_and(|k| (relem(k), relem(k)))) {
        let c = |r: &RElem| r_conj(r, ConjMode::Coefficient);
        prop_assert_eq!(c(&c(&a)), a);
        prop_assert_eq!(c(&(a + b)), c(&a) + c(&b));
    }
}
