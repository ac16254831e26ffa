//! Exact Newton interpolation for univariate data over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Coefficients, in ascending powers, of the unique polynomial of degree
/// `< nodes.len()` through the given points. Nodes must be pairwise distinct.
/// Trailing zero coefficients are trimmed, so `len() - 1` is the exact degree
/// (a single zero remains for the zero polynomial).
pub(crate) fn newton_interpolate(
    nodes: &[BigRational],
    values: &[BigRational],
) -> Vec<BigRational> {
    assert_eq!(nodes.len(), values.len(), "one value per node");
    assert!(!nodes.is_empty(), "need at least one node");
    let k = nodes.len();

    // Divided differences, in place: dd[i] ends as f[x_0, ..., x_i].
    let mut dd: Vec<BigRational> = values.to_vec();
    for j in 1..k {
        for i in (j..k).rev() {
            let den = &nodes[i] - &nodes[i - j];
            assert!(!den.is_zero(), "interpolation nodes must be distinct");
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }

    // Horner expansion of the Newton form into the monomial basis.
    let mut coeffs: Vec<BigRational> = vec![dd[k - 1].clone()];
    for i in (0..k - 1).rev() {
        let a = &nodes[i];
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (t, c) in coeffs.iter().enumerate() {
            next[t + 1] += c;
            next[t] -= a * c;
        }
        next[0] += &dd[i];
        coeffs = next;
    }

    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
    }
    coeffs
}

/// Horner evaluation of ascending coefficients at a rational point.
#[cfg(test)]
pub(crate) fn eval_rational_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn recovers_a_cubic() {
        // p(x) = x^3 - 2x + 1 sampled at 0..=3
        let nodes: Vec<_> = (0..4).map(rat).collect();
        let values: Vec<_> = (0..4).map(|x| rat(x * x * x - 2 * x + 1)).collect();
        let coeffs = newton_interpolate(&nodes, &values);
        assert_eq!(coeffs, vec![rat(1), rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn trims_to_exact_degree() {
        // Constant data through three nodes stays degree 0.
        let nodes: Vec<_> = (0..3).map(rat).collect();
        let values = vec![rat(7), rat(7), rat(7)];
        assert_eq!(newton_interpolate(&nodes, &values), vec![rat(7)]);
    }

    #[test]
    fn interpolant_passes_through_the_data() {
        let nodes: Vec<_> = (-2..3).map(rat).collect();
        let values: Vec<_> = (-2..3).map(|x| BigRational::new((3 * x - 1).into(), 4.into())).collect();
        let coeffs = newton_interpolate(&nodes, &values);
        for (x, v) in nodes.iter().zip(&values) {
            assert_eq!(eval_rational_poly(&coeffs, x), *v);
        }
    }
}
