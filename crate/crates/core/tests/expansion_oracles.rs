mod common;

use common::series::hermite_gf;
use common::{derivative_kernel_closed_form, poly, q, random_poly, triangular_solve, x_pow};
use hermite_identities::{
    bernstein_poly, derivative_kernel_integral, expand, genocchi_poly, kim_identity_rhs,
    kim_sum_poly, theorem1_coeffs, theorem2_coeffs, theorem3_coeffs, Polynomial, Variant,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn hermite_basis(len: usize) -> Vec<Polynomial> {
    let gf = hermite_gf(len);
    (0..len).map(|n| gf.egf_coeff(n)).collect()
}

#[test]
fn expand_examples_against_linear_solve() {
    let basis = hermite_basis(4);
    let x2 = x_pow(2);
    assert_eq!(
        triangular_solve(&x2, &basis),
        vec![q(1, 2), q(0, 1), q(1, 4)]
    );
    assert_eq!(expand(&x2).coeffs, triangular_solve(&x2, &basis));
    let p = poly(&[(-1, 2), (2, 1)]);
    assert_eq!(expand(&p).coeffs, vec![q(-1, 2), q(1, 1)]);
}

#[test]
fn expand_agrees_with_triangular_solve() {
    let basis = hermite_basis(13);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let p = random_poly(&mut rng, 12);
        let e = expand(&p);
        assert_eq!(e.coeffs, triangular_solve(&p, &basis), "p = {p}");
        assert_eq!(e.reconstruct(), p);
    }
}

#[test]
fn derivative_kernel_matches_branch_formula() {
    for n in 0..=14 {
        for m in 0..=14 {
            assert_eq!(
                derivative_kernel_integral(n, &x_pow(m)).coeff,
                derivative_kernel_closed_form(n, m),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn theorem1_equals_projection() {
    for n in 1..=12 {
        let closed = theorem1_coeffs(n);
        let oracle = expand(&genocchi_poly(n));
        assert_eq!(closed.len(), n + 1);
        for k in 0..=n {
            assert_eq!(closed.coeff(k), oracle.coeff(k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn theorem2_equals_projection() {
    for n in 0..=10 {
        for l in 0..=n {
            let closed = theorem2_coeffs(l, n).unwrap();
            let oracle = expand(&bernstein_poly(l, n).unwrap());
            assert_eq!(closed, oracle, "l = {l}, n = {n}");
        }
    }
}

#[test]
fn kim_identity_holds() {
    for n in 1..=12 {
        assert_eq!(kim_identity_rhs(n).unwrap(), kim_sum_poly(n), "n = {n}");
    }
}

#[test]
fn theorem3_corrected_equals_projection() {
    for n in 1..=12 {
        let closed = theorem3_coeffs(n, Variant::Corrected).unwrap();
        assert_eq!(closed, expand(&kim_sum_poly(n)), "n = {n}");
    }
}

#[test]
fn theorem3_variants_differ_exactly_where_sign_is_odd() {
    for n in 1..=12 {
        let v = theorem3_coeffs(n, Variant::Verbatim).unwrap();
        let c = theorem3_coeffs(n, Variant::Corrected).unwrap();
        for k in 0..=n {
            if (n + k) % 2 == 0 {
                assert_eq!(v.coeff(k), c.coeff(k), "n = {n}, k = {k}");
            }
        }
    }
}
