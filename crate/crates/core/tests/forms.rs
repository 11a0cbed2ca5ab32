use proptest::prelude::*;

use real_schemes::zform::{BrownValue, Z4Form};

/// Pairing rows and basis values of a random form.
fn raw_form(max_dim: usize) -> impl Strategy<Value = (Vec<Vec<u8>>, Vec<u8>)> {
    (0..=max_dim).prop_flat_map(|dim| {
        (proptest::collection::vec(any::<bool>(), dim * dim), proptest::collection::vec(any::<bool>(), dim)).prop_map(
            move |(bits, hi)| {
                let mut pairing = vec![vec![0u8; dim]; dim];
                for i in 0..dim {
                    for j in 0..=i {
                        let b = u8::from(bits[i * dim + j]);
                        pairing[i][j] = b;
                        pairing[j][i] = b;
                    }
                }
                let values = (0..dim).map(|i| pairing[i][i] + 2 * u8::from(hi[i])).collect();
                (pairing, values)
            },
        )
    })
}

/// `q(x) = Σ x_i q(e_i) + 2 Σ_{i<j} x_i x_j (e_i·e_j) mod 4`, summed over all `x`.
#[allow(clippy::needless_range_loop)]
fn gauss_oracle(pairing: &[Vec<u8>], values: &[u8]) -> (i64, i64) {
    let dim = values.len();
    let (mut re, mut im) = (0i64, 0i64);
    for x in 0u32..(1 << dim) {
        let bit = |i: usize| x >> i & 1;
        let mut q = 0u32;
        for i in 0..dim {
            q += bit(i) * u32::from(values[i]);
            for j in 0..i {
                q += 2 * bit(i) * bit(j) * u32::from(pairing[i][j]);
            }
        }
        match q % 4 {
            0 => re += 1,
            1 => im += 1,
            2 => re -= 1,
            _ => im -= 1,
        }
    }
    (re, im)
}

fn oracle_brown(re: i64, im: i64) -> Option<u8> {
    if (re, im) == (0, 0) {
        return None;
    }
    let angle = (im as f64).atan2(re as f64);
    Some(((angle / std::f64::consts::FRAC_PI_4).round() as i64).rem_euclid(8) as u8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gauss_sum_matches_brute_force((pairing, values) in raw_form(6)) {
        let form = Z4Form::new(pairing.clone(), values.clone()).unwrap();
        let g = form.gauss_sum();
        let (re, im) = gauss_oracle(&pairing, &values);
        prop_assert_eq!((g.re, g.im), (re, im));
        prop_assert_eq!(form.brown_invariant().value(), oracle_brown(re, im));
    }

    #[test]
    fn brown_is_additive((p1, v1) in raw_form(3), (p2, v2) in raw_form(3)) {
        let a = Z4Form::new(p1, v1).unwrap();
        let b = Z4Form::new(p2, v2).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        match (a.brown_invariant(), b.brown_invariant()) {
            (BrownValue::Value(x), BrownValue::Value(y)) => {
                prop_assert_eq!(sum.brown_invariant(), BrownValue::new(i64::from(x) + i64::from(y)));
            }
            _ => prop_assert_eq!(sum.brown_invariant(), BrownValue::NonInformative),
        }
    }

    #[test]
    fn even_forms_have_real_gauss_sums((pairing, values) in raw_form(6)) {
        let form = Z4Form::new(pairing, values).unwrap();
        if form.is_even() {
            prop_assert_eq!(form.gauss_sum().im, 0);
        }
    }

    #[test]
    fn nondegenerate_norm((pairing, values) in raw_form(6)) {
        let form = Z4Form::new(pairing, values).unwrap();
        if form.is_nondegenerate() {
            prop_assert_eq!(form.gauss_sum().norm_sq(), 1i128 << form.dim());
        }
    }

    #[test]
    fn json_round_trip((pairing, values) in raw_form(6)) {
        let form = Z4Form::new(pairing, values).unwrap();
        let text = serde_json::to_string(&form).unwrap();
        prop_assert_eq!(serde_json::from_str::<Z4Form>(&text).unwrap(), form);
    }
}

#[test]
fn named_values() {
    let line = |v: u8| Z4Form::new(vec![vec![1]], vec![v]).unwrap().brown_invariant();
    assert_eq!((line(1), line(3)), (BrownValue::Value(1), BrownValue::Value(7)));
    let hyperbolic = |a: u8, b: u8| Z4Form::new(vec![vec![0, 1], vec![1, 0]], vec![a, b]).unwrap().brown_invariant();
    assert_eq!(hyperbolic(0, 0), BrownValue::Value(0));
    assert_eq!(hyperbolic(2, 2), BrownValue::Value(4));
    assert_eq!(Z4Form::empty().brown_invariant(), BrownValue::Value(0));
}
