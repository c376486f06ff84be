use std::collections::BTreeMap;

use fracgrow_core::{
    adm_iterate, adomian_polynomials, apply_ls, partial_sum, term_multiply, ExactTermSum,
    FracOrder, PolynomialNonlinearity, Rational, SeriesTerm, TermSum,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn random_sum(rng: &mut StdRng) -> ExactTermSum {
    let len = rng.gen_range(0..=3);
    TermSum::from_terms((0..len).map(|_| {
        SeriesTerm::new(
            q(rng.gen_range(-9..=9), rng.gen_range(1..=5)),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        )
    }))
}

/// Σ_{i+j=n} w_i · w_j, the Cauchy convolution.
fn cauchy_square(w: &[ExactTermSum], n: usize) -> ExactTermSum {
    let mut acc = TermSum::zero();
    for i in 0..=n {
        acc = &acc + &term_multiply(&w[i], &w[n - i]).unwrap();
    }
    acc
}

#[test]
fn square_polynomials_are_cauchy_products() {
    let sq = PolynomialNonlinearity::<Rational>::power(2).unwrap();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let w: Vec<ExactTermSum> = (0..=10).map(|_| random_sum(&mut rng)).collect();
        for n in 0..=10 {
            assert_eq!(
                adomian_polynomials(&sq, &w, n).unwrap(),
                cauchy_square(&w, n)
            );
        }
    }
}

#[test]
fn cubic_polynomials_match_lambda_expansion() {
    // λⁿ coefficient of (Σ λⁱ wᵢ)³, expanded by brute force over index triples.
    let cube = PolynomialNonlinearity::<Rational>::power(3).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let w: Vec<ExactTermSum> = (0..=5).map(|_| random_sum(&mut rng)).collect();
        for n in 0..=5 {
            let mut want = TermSum::zero();
            for i in 0..=5 {
                for j in 0..=5 {
                    for k in 0..=5 {
                        if i + j + k == n {
                            let p = term_multiply(&term_multiply(&w[i], &w[j]).unwrap(), &w[k])
                                .unwrap();
                            want = &want + &p;
                        }
                    }
                }
            }
            assert_eq!(adomian_polynomials(&cube, &w, n).unwrap(), want);
        }
    }
}

#[test]
fn degenerate_split_reproduces_nonlinearity() {
    let nl = PolynomialNonlinearity::new([(1, q(1, 1)), (2, q(1, 1)), (3, q(-2, 3))]).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10 {
        let w = random_sum(&mut rng);
        let mut ws = vec![w.clone()];
        ws.extend((0..6).map(|_| ExactTermSum::zero()));
        assert_eq!(
            adomian_polynomials(&nl, &ws, 0).unwrap(),
            nl.apply(&w, 64).unwrap()
        );
        for n in 1..=6 {
            assert!(adomian_polynomials(&nl, &ws, n).unwrap().is_empty());
        }
    }
}

#[test]
fn square_of_one_plus_t() {
    // Oracle: expand in the monomial basis t^n, then renormalize by n!.
    let x: ExactTermSum = TermSum::from_terms([
        SeriesTerm::new(q(1, 1), 0, 0),
        SeriesTerm::new(q(1, 1), 0, 1),
    ]);
    let mono = [1i64, 1]; // 1 + t
    let mut sq = [0i64; 3];
    for (i, a) in mono.iter().enumerate() {
        for (j, b) in mono.iter().enumerate() {
            sq[i + j] += a * b;
        }
    }
    let factorial = [1i64, 1, 2];
    let want = TermSum::from_terms(
        (0..3).map(|n| SeriesTerm::new(q(sq[n] * factorial[n], 1), 0, n as u32)),
    );
    let got = term_multiply(&x, &x).unwrap();
    assert_eq!(got, want);
    assert_eq!(got.coeff(0, 2), Some(&q(2, 1)));
}

#[test]
fn classical_space_operator_is_ordinary_derivative() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..50 {
        let r: f64 = rng.gen_range(0.01..0.99);
        let x = TermSum::from_terms((0..4).map(|_| {
            SeriesTerm::new(
                rng.gen_range(-5.0..5.0),
                rng.gen_range(0..4),
                rng.gen_range(0..4),
            )
        }));
        let got = apply_ls(&x, FracOrder::one(), r).unwrap();
        let want =
            TermSum::from_terms(x.iter().map(|t| {
                SeriesTerm::new(t.coeff * (t.exp_mult as f64 * r), t.exp_mult, t.t_power)
            }));
        assert_eq!(got, want);
    }
}

#[test]
fn truncated_series_obeys_remainder_bound() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let m: f64 = rng.gen_range(0.1..5.0);
        let r: f64 = rng.gen_range(0.01..0.99);
        let b: f64 = rng.gen_range(0.05..=1.0);
        let eta: f64 = rng.gen_range(-0.5..0.8);
        let s: f64 = rng.gen_range(0.0..24.0);
        let t: f64 = rng.gen_range(0.0..24.0);
        let order = FracOrder::new(b).unwrap();
        let ws = adm_iterate(&TermSum::single(m, 1, 0), order, r, eta, None, None, 25).unwrap();
        let x = eta - r.powf(b);
        let exact = m * (r * s).exp() * (x * t).exp();
        for depth in [5usize, 10, 25] {
            let approx = partial_sum(&ws[..=depth], r, s, t);
            let xt = (x * t).abs();
            let mut tail = 1.0;
            for i in 1..=depth + 1 {
                tail *= xt / i as f64;
            }
            let bound = m * (r * s).exp() * tail * xt.exp();
            // Rounding in the partial sum itself.
            let slack = 1e-13 * m * (r * s).exp() * xt.exp();
            assert!(
                (approx - exact).abs() <= bound + slack,
                "depth {depth}: |{approx} - {exact}| > {bound}"
            );
        }
    }
}

fn exact_sum_strategy() -> impl Strategy<Value = ExactTermSum> {
    prop::collection::vec((-6i64..=6, 1i64..=4, 0u32..=3, 0u32..=3), 0..4).prop_map(|v| {
        TermSum::from_terms(
            v.into_iter()
                .map(|(n, d, k, p)| SeriesTerm::new(q(n, d), k, p)),
        )
    })
}

proptest! {
    #[test]
    fn multiply_commutes(a in exact_sum_strategy(), b in exact_sum_strategy()) {
        prop_assert_eq!(term_multiply(&a, &b).unwrap(), term_multiply(&b, &a).unwrap());
    }

    #[test]
    fn multiply_associates(a in exact_sum_strategy(), b in exact_sum_strategy(), c in exact_sum_strategy()) {
        let left = term_multiply(&term_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = term_multiply(&a, &term_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiply_matches_pointwise_product(
        a in prop::collection::vec((-3.0f64..3.0, 0u32..3, 0u32..4), 0..4),
        b in prop::collection::vec((-3.0f64..3.0, 0u32..3, 0u32..4), 0..4),
        s in 0.0f64..3.0,
        t in 0.0f64..3.0,
    ) {
        let to_sum = |v: &[(f64, u32, u32)]| TermSum::from_terms(v.iter().map(|&(c, k, n)| SeriesTerm::new(c, k, n)));
        let (x, y) = (to_sum(&a), to_sum(&b));
        let r = 0.3;
        let lhs = term_multiply(&x, &y).unwrap().evaluate(r, s, t);
        let rhs = x.evaluate(r, s, t) * y.evaluate(r, s, t);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
    }

    #[test]
    fn canonical_form_has_no_zero_terms(a in exact_sum_strategy(), b in exact_sum_strategy()) {
        let sum = &a - &b;
        let mut seen = BTreeMap::new();
        for term in sum.iter() {
            prop_assert!(term.coeff != q(0, 1));
            prop_assert!(seen.insert((term.exp_mult, term.t_power), ()).is_none());
        }
        prop_assert!((&a - &a).is_empty());
    }
}
