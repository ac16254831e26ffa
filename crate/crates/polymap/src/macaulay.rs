//! Macaulay resultants of m homogeneous forms in m variables.
//!
//! The classical construction: at the critical degree D = d_1 + ... + d_m
//! - m + 1 the square matrix M has one row per degree-D monomial x^a, holding
//! the coefficients of (x^a / x_i^{d_i}) * H_i, where i is the smallest index
//! with a_i >= d_i. Then det(M) = Res * det(M') for the principal minor M' on
//! the monomials with a_j >= d_j for two or more indices j, which pins the
//! normalization Res(x_1^{d_1}, ..., x_m^{d_m}) = 1. When det(M') = 0, the
//! resultant of the perturbed system H_i + u * x_i^{d_i} — monic in u of
//! degree sum_i prod_{j != i} d_j — is interpolated exactly from integer
//! u-nodes and read off at u = 0.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::interp::newton_interpolate;
use crate::polyring::{monomials_of_degree, Exponent, MultiPoly};

/// Default cap on the number of Macaulay matrix columns.
pub const DEFAULT_MAX_COLUMNS: usize = 5000;

/// The build's fixed resultant normalization.
pub const SIGN_CONVENTION: &str =
    "graded-lex Macaulay quotient, normalized so Res(x1^d1, ..., xm^dm) = 1";

#[derive(Debug, Error)]
pub enum MacaulayError {
    #[error("form {} is the zero polynomial", .index + 1)]
    ZeroForm { index: usize },
    #[error("form {} is not homogeneous", .index + 1)]
    NotHomogeneous { index: usize },
    #[error("form {} has degree 0; every form must have degree >= 1", .index + 1)]
    DegreeZeroForm { index: usize },
    #[error("Macaulay matrix needs {columns} columns, over the limit of {limit}")]
    TooLarge { columns: BigInt, limit: usize },
    #[error(
        "perturbation fallback rejected {rejected} interpolation nodes; the system looks pathological"
    )]
    NodeExhaustion { rejected: usize },
}

/// m homogeneous forms of positive degrees in m variables.
#[derive(Clone, Debug)]
pub struct FormSystem {
    forms: Vec<MultiPoly>,
    degrees: Vec<u32>,
}

impl FormSystem {
    pub fn new(forms: Vec<MultiPoly>) -> Result<FormSystem, MacaulayError> {
        let m = forms.len();
        assert!(m >= 2, "need at least two forms");
        let mut degrees = Vec::with_capacity(m);
        for (i, f) in forms.iter().enumerate() {
            assert_eq!(f.arity(), m, "form arity must equal the number of forms");
            if f.is_zero() {
                return Err(MacaulayError::ZeroForm { index: i });
            }
            match f.homogeneous_degree() {
                Some(0) => return Err(MacaulayError::DegreeZeroForm { index: i }),
                Some(d) => degrees.push(d),
                None => return Err(MacaulayError::NotHomogeneous { index: i }),
            }
        }
        Ok(FormSystem { forms, degrees })
    }

    pub fn m(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[MultiPoly] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// D = d_1 + ... + d_m - m + 1.
    pub fn critical_degree(&self) -> u32 {
        self.degrees.iter().sum::<u32>() - self.m() as u32 + 1
    }
}

/// The assembled matrix together with its class partition and the index set
/// of the extraneous minor.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    pub critical_degree: u32,
    /// All degree-D monomials, ascending graded-lex; row i is built from
    /// `columns[i]`.
    pub columns: Vec<Exponent>,
    /// Class of each column monomial: the smallest i with a_i >= d_i.
    pub classes: Vec<usize>,
    pub rows: Vec<Vec<BigRational>>,
    /// True for the monomials with a_j >= d_j for at least two j; these
    /// rows/columns form the extraneous minor M'.
    pub minor_mask: Vec<bool>,
}

impl MacaulayMatrix {
    pub fn build(s: &FormSystem, max_columns: usize) -> Result<MacaulayMatrix, MacaulayError> {
        let m = s.m();
        let d_crit = s.critical_degree();
        let ncols = binomial(BigInt::from(d_crit) + m as u32 - 1u32, m as u64 - 1);
        if ncols > BigInt::from(max_columns) {
            return Err(MacaulayError::TooLarge { columns: ncols, limit: max_columns });
        }

        let columns = monomials_of_degree(m, d_crit);
        let index: BTreeMap<&Exponent, usize> =
            columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut classes = Vec::with_capacity(columns.len());
        let mut minor_mask = Vec::with_capacity(columns.len());
        let mut rows = Vec::with_capacity(columns.len());
        for a in &columns {
            let cls = (0..m)
                .find(|&i| a.powers()[i] >= s.degrees[i])
                .expect("a degree-D monomial always has a class");
            let heavy =
                a.powers().iter().zip(&s.degrees).filter(|&(&p, &d)| p >= d).count();
            classes.push(cls);
            minor_mask.push(heavy >= 2);

            let mut mult = a.powers().to_vec();
            mult[cls] -= s.degrees[cls];
            let mut row = vec![BigRational::zero(); columns.len()];
            for (e, c) in s.forms[cls].terms() {
                let target = Exponent::new(
                    mult.iter().zip(e.powers()).map(|(x, y)| x + y).collect(),
                );
                row[index[&target]] = c.clone();
            }
            rows.push(row);
        }
        Ok(MacaulayMatrix { critical_degree: d_crit, columns, classes, rows, minor_mask })
    }
}

/// C(n, k) exactly.
fn binomial(n: BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (&n - i) / (i + 1);
    }
    acc
}

/// Exact determinant of a square rational matrix: each row is scaled to
/// integers, then Bareiss fraction-free elimination with row pivoting.
pub fn det_fraction_free(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut l = BigInt::one();
        for x in row {
            l = l.lcm(x.denom());
        }
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        scale *= l;
    }

    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pk = &top[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::replace(&mut row[k], BigInt::zero());
            for j in k + 1..n {
                let val = (&pk[k] * &row[j] - &lead * &pk[j]) / &prev;
                row[j] = val;
            }
        }
        prev = a[k][k].clone();
    }

    let det = if sign < 0 { -a[n - 1][n - 1].clone() } else { a[n - 1][n - 1].clone() };
    BigRational::new(det, scale)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    DirectQuotient,
    PerturbationInterpolation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantValue {
    pub value: BigRational,
    pub method: Method,
    pub sign_convention: &'static str,
}

/// The Macaulay resultant of the system. Zero exactly when the forms share a
/// projective zero.
pub fn resultant(s: &FormSystem, max_columns: usize) -> Result<ResultantValue, MacaulayError> {
    let mat = MacaulayMatrix::build(s, max_columns)?;
    let minor = principal_submatrix(&mat.rows, &mat.minor_mask);
    let dminor = det_fraction_free(&minor);
    if !dminor.is_zero() {
        let dm = det_fraction_free(&mat.rows);
        return Ok(ResultantValue {
            value: dm / dminor,
            method: Method::DirectQuotient,
            sign_convention: SIGN_CONVENTION,
        });
    }
    let value = perturbation_resultant(&mat, s.degrees())?;
    Ok(ResultantValue {
        value,
        method: Method::PerturbationInterpolation,
        sign_convention: SIGN_CONVENTION,
    })
}

/// Interpolates Res(H_i + u * x_i^{d_i}) in u and evaluates at u = 0. Works
/// whenever some perturbed minor is non-singular, which fails only for
/// pathological systems.
fn perturbation_resultant(mat: &MacaulayMatrix, degrees: &[u32]) -> Result<BigRational, MacaulayError> {
    // Reduced monomials (not in the minor) count the u-degree of the
    // perturbed resultant: sum_i prod_{j != i} d_j.
    let udeg = mat.minor_mask.iter().filter(|&&b| !b).count();
    debug_assert_eq!(
        udeg as u128,
        (0..degrees.len())
            .map(|i| {
                degrees
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &d)| d as u128)
                    .product::<u128>()
            })
            .sum::<u128>()
    );
    let needed = udeg + 1;
    let mut nodes: Vec<BigRational> = Vec::with_capacity(needed);
    let mut values: Vec<BigRational> = Vec::with_capacity(needed);
    let mut rejected = 0usize;
    let mut u = 0u64;
    while nodes.len() < needed {
        if rejected > 10 * needed {
            return Err(MacaulayError::NodeExhaustion { rejected });
        }
        let ur = BigRational::from_integer(BigInt::from(u));
        let mut rows = mat.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let v = &row[i] + &ur;
            row[i] = v;
        }
        let minor = principal_submatrix(&rows, &mat.minor_mask);
        let dminor = det_fraction_free(&minor);
        if dminor.is_zero() {
            rejected += 1;
        } else {
            let dm = det_fraction_free(&rows);
            nodes.push(ur);
            values.push(dm / dminor);
        }
        u += 1;
    }
    let coeffs = newton_interpolate(&nodes, &values);
    // The perturbed resultant is monic of degree exactly `udeg` in u.
    debug_assert_eq!(coeffs.len(), needed);
    debug_assert!(coeffs.last().unwrap().is_one());
    Ok(coeffs[0].clone())
}

fn principal_submatrix(rows: &[Vec<BigRational>], mask: &[bool]) -> Vec<Vec<BigRational>> {
    let idx: Vec<usize> =
        mask.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)).collect();
    idx.iter().map(|&i| idx.iter().map(|&j| rows[i][j].clone()).collect()).collect()
}

/// Independent resultant oracle for two binary forms: the determinant of the
/// classical Sylvester matrix.
pub fn sylvester_oracle(p: &MultiPoly, q: &MultiPoly) -> BigRational {
    assert_eq!(p.arity(), 2, "Sylvester oracle needs binary forms");
    assert_eq!(q.arity(), 2, "Sylvester oracle needs binary forms");
    let dp = p.homogeneous_degree().expect("p must be a nonzero homogeneous form") as usize;
    let dq = q.homogeneous_degree().expect("q must be a nonzero homogeneous form") as usize;
    assert!(dp >= 1 && dq >= 1, "form degrees must be >= 1");
    let coeffs = |f: &MultiPoly, d: usize| -> Vec<BigRational> {
        (0..=d)
            .map(|i| f.coeff(&Exponent::new(vec![(d - i) as u32, i as u32])))
            .collect()
    };
    let a = coeffs(p, dp);
    let b = coeffs(q, dq);
    let size = dp + dq;
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for r in 0..dq {
        for (c, ai) in a.iter().enumerate() {
            mat[r][r + c] = ai.clone();
        }
    }
    for r in 0..dp {
        for (c, bi) in b.iter().enumerate() {
            mat[dq + r][r + c] = bi.clone();
        }
    }
    det_fraction_free(&mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::eval_rational_poly;
    use crate::polyring::parse::parse_poly;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    const ZV2: [&str; 2] = ["Z0", "Z1"];
    const ZV3: [&str; 3] = ["Z0", "Z1", "Z2"];

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rat_pow(x: &BigRational, k: u32) -> BigRational {
        (0..k).fold(BigRational::one(), |acc, _| acc * x)
    }

    fn sys2(a: &str, b: &str) -> FormSystem {
        FormSystem::new(vec![parse_poly(a, &ZV2).unwrap(), parse_poly(b, &ZV2).unwrap()])
            .unwrap()
    }

    fn sys3(a: &str, b: &str, c: &str) -> FormSystem {
        FormSystem::new(vec![
            parse_poly(a, &ZV3).unwrap(),
            parse_poly(b, &ZV3).unwrap(),
            parse_poly(c, &ZV3).unwrap(),
        ])
        .unwrap()
    }

    fn res(s: &FormSystem) -> ResultantValue {
        resultant(s, DEFAULT_MAX_COLUMNS).unwrap()
    }

    fn random_form(rng: &mut ChaCha8Rng, arity: usize, degree: u32) -> MultiPoly {
        loop {
            let p = MultiPoly::from_terms(
                arity,
                monomials_of_degree(arity, degree).into_iter().filter_map(|e| {
                    let c: i64 = rng.gen_range(-5..=5);
                    (c != 0).then(|| (e, rat(c)))
                }),
            );
            if !p.is_zero() {
                return p;
            }
        }
    }

    #[test]
    fn determinant_examples() {
        let m = vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]];
        assert_eq!(det_fraction_free(&m), rat(-2));

        let id: Vec<Vec<BigRational>> =
            (0..5).map(|i| (0..5).map(|j| rat((i == j) as i64)).collect()).collect();
        assert_eq!(det_fraction_free(&id), rat(1));

        let sing = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(det_fraction_free(&sing), rat(0));

        let frac = vec![
            vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 3.into())],
            vec![BigRational::new(1.into(), 4.into()), BigRational::new(1.into(), 5.into())],
        ];
        assert_eq!(det_fraction_free(&frac), BigRational::new(1.into(), 60.into()));
    }

    #[test]
    fn matrix_shapes_match_the_size_formula() {
        let m = MacaulayMatrix::build(&sys2("Z0", "Z1"), DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(m.critical_degree, 1);
        assert_eq!(m.columns.len(), 2);

        let m = MacaulayMatrix::build(&sys3("Z0", "Z1", "Z2"), DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(m.critical_degree, 1);
        assert_eq!(m.columns.len(), 3);
        // identity permutation: row for each variable-monomial carries a 1 at
        // its own column
        for (i, row) in m.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, rat((i == j) as i64));
            }
        }

        let m = MacaulayMatrix::build(&sys3("Z0^2", "Z1^2", "Z2"), DEFAULT_MAX_COLUMNS).unwrap();
        assert_eq!(m.critical_degree, 3);
        assert_eq!(m.columns.len(), 10);
    }

    #[test]
    fn matrix_size_limit_is_enforced() {
        let err = MacaulayMatrix::build(&sys3("Z0^9", "Z1^9", "Z2^9"), 10).unwrap_err();
        assert!(matches!(err, MacaulayError::TooLarge { .. }));
    }

    #[test]
    fn linear_resultant_is_the_coefficient_determinant() {
        let r = res(&sys2("Z0 + 2*Z1", "3*Z0 + 4*Z1"));
        assert_eq!(r.value, rat(-2));
        assert_eq!(r.method, Method::DirectQuotient);
    }

    #[test]
    fn common_projective_zero_forces_vanishing() {
        assert!(res(&sys2("Z0^2 - Z1^2", "Z0 - Z1")).value.is_zero());
    }

    #[test]
    fn monomial_systems_are_normalized_to_one() {
        assert_eq!(res(&sys2("Z0^3", "Z1^2")).value, rat(1));
        assert_eq!(res(&sys3("Z0", "Z1", "Z2")).value, rat(1));
        assert_eq!(res(&sys3("Z0^2", "Z1^2", "Z2^3")).value, rat(1));
    }

    #[test]
    fn rejects_malformed_systems() {
        let z = MultiPoly::zero(2);
        let l = parse_poly("Z0", &ZV2).unwrap();
        assert!(matches!(
            FormSystem::new(vec![z, l.clone()]),
            Err(MacaulayError::ZeroForm { index: 0 })
        ));
        let inhom = parse_poly("Z0^2 + Z1", &ZV2).unwrap();
        assert!(matches!(
            FormSystem::new(vec![l.clone(), inhom]),
            Err(MacaulayError::NotHomogeneous { index: 1 })
        ));
        let c = parse_poly("2", &ZV2).unwrap();
        assert!(matches!(
            FormSystem::new(vec![l, c]),
            Err(MacaulayError::DegreeZeroForm { index: 1 })
        ));
    }

    #[test]
    fn sylvester_examples() {
        let p = parse_poly("Z0*Z1", &ZV2).unwrap();
        let q = parse_poly("2*Z0^2 + 3*Z0*Z1 + 5*Z1^2", &ZV2).unwrap();
        assert_eq!(sylvester_oracle(&p, &q).abs(), rat(10));

        let p = parse_poly("Z0 - Z1", &ZV2).unwrap();
        let q = parse_poly("Z0 + Z1", &ZV2).unwrap();
        assert_eq!(sylvester_oracle(&p, &q).abs(), rat(2));

        let p = parse_poly("Z0^2", &ZV2).unwrap();
        let q = parse_poly("Z1^2", &ZV2).unwrap();
        assert_eq!(sylvester_oracle(&p, &q).abs(), rat(1));
    }

    #[test]
    fn macaulay_matches_sylvester_up_to_a_fixed_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut signs: HashMap<(u32, u32), BigRational> = HashMap::new();
        for _ in 0..50 {
            let dp = rng.gen_range(1..=4);
            let dq = rng.gen_range(1..=4);
            let p = random_form(&mut rng, 2, dp);
            let q = random_form(&mut rng, 2, dq);
            let syl = sylvester_oracle(&p, &q);
            let mac = res(&FormSystem::new(vec![p, q]).unwrap()).value;
            assert_eq!(mac.is_zero(), syl.is_zero());
            if syl.is_zero() {
                continue;
            }
            let ratio = &mac / &syl;
            assert!(
                ratio == rat(1) || ratio == rat(-1),
                "expected ratio of +-1, got {ratio}"
            );
            let prev = signs.entry((dp, dq)).or_insert_with(|| ratio.clone());
            assert_eq!(prev, &ratio, "inconsistent sign for degrees ({dp},{dq})");
        }
    }

    #[test]
    fn scaling_one_form_is_multihomogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let degrees: Vec<u32> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
            let forms: Vec<MultiPoly> =
                degrees.iter().map(|&d| random_form(&mut rng, 3, d)).collect();
            let base = res(&FormSystem::new(forms.clone()).unwrap()).value;
            let num: i64 = *[-3i64, -2, 2, 3, 5].iter().nth(rng.gen_range(0..5)).unwrap();
            let lambda = BigRational::new(num.into(), rng.gen_range(1..=4i64).into());
            for i in 0..3 {
                let mut scaled = forms.clone();
                scaled[i] = scaled[i].scale(&lambda);
                let r = res(&FormSystem::new(scaled).unwrap()).value;
                let e: u32 = degrees
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &d)| d)
                    .product();
                assert_eq!(r, rat_pow(&lambda, e) * &base);
            }
        }
    }

    #[test]
    fn planted_zero_vanishes_and_zero_free_does_not() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let point = [rat(1), rat(2), rat(-1)];
        let mut done = 0;
        while done < 5 {
            let degrees: Vec<u32> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
            let forms: Vec<MultiPoly> = degrees
                .iter()
                .map(|&d| {
                    let f = random_form(&mut rng, 3, d);
                    let v = f.eval_rational(&point);
                    // subtract v * Z0^d so the form vanishes at the point
                    // (whose Z0-coordinate is 1)
                    &f - &MultiPoly::monomial(Exponent::axis(3, 0, d), v)
                })
                .collect();
            let Ok(s) = FormSystem::new(forms) else { continue };
            assert!(res(&s).value.is_zero());
            done += 1;
        }

        for d in 1..=3u32 {
            let forms: Vec<MultiPoly> =
                (0..3).map(|i| MultiPoly::monomial(Exponent::axis(3, i, d), rat(1))).collect();
            assert_eq!(res(&FormSystem::new(forms).unwrap()).value, rat(1));
        }
    }

    #[test]
    fn interpolated_parameter_matches_direct_specialization() {
        // Res(A_i + t * B_i) is a polynomial in t of degree at most
        // sum_i prod_{j != i} d_j; recover it from integer nodes and compare
        // against direct computation at 20 random rational points.
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let degrees = [1u32, 2, 2];
        let a_forms: Vec<MultiPoly> =
            degrees.iter().map(|&d| random_form(&mut rng, 3, d)).collect();
        let b_forms: Vec<MultiPoly> =
            degrees.iter().map(|&d| random_form(&mut rng, 3, d)).collect();
        let res_at = |t: &BigRational| -> BigRational {
            let forms: Vec<MultiPoly> =
                a_forms.iter().zip(&b_forms).map(|(a, b)| a + &b.scale(t)).collect();
            res(&FormSystem::new(forms).unwrap()).value
        };
        let udeg = 2 * 2 + 1 * 2 + 1 * 2;
        let nodes: Vec<BigRational> = (0..=udeg).map(rat).collect();
        let values: Vec<BigRational> = nodes.iter().map(res_at).collect();
        let coeffs = newton_interpolate(&nodes, &values);
        for _ in 0..20 {
            let t = BigRational::new(
                rng.gen_range(-30i64..=30).into(),
                rng.gen_range(1i64..=7).into(),
            );
            assert_eq!(eval_rational_poly(&coeffs, &t), res_at(&t));
        }
    }

    #[test]
    fn perturbation_agrees_with_the_direct_quotient() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut done = 0;
        while done < 8 {
            let degrees: Vec<u32> = (0..3).map(|_| rng.gen_range(1..=2)).collect();
            let forms: Vec<MultiPoly> =
                degrees.iter().map(|&d| random_form(&mut rng, 3, d)).collect();
            let s = FormSystem::new(forms).unwrap();
            let mat = MacaulayMatrix::build(&s, DEFAULT_MAX_COLUMNS).unwrap();
            let minor = principal_submatrix(&mat.rows, &mat.minor_mask);
            if det_fraction_free(&minor).is_zero() {
                continue;
            }
            let direct = res(&s);
            assert_eq!(direct.method, Method::DirectQuotient);
            let pert = perturbation_resultant(&mat, s.degrees()).unwrap();
            assert_eq!(pert, direct.value);
            done += 1;
        }
    }

    #[test]
    fn fallback_handles_a_degenerate_minor() {
        // For degrees (1,1,2) the extraneous minor is 1x1 and holds the
        // Z0-coefficient of the first form, so H1 = Z1 forces det(M') = 0.
        // For two linear forms and a quadric, Res(L1, L2, Q) = Q(L1 x L2)
        // (cross product of coefficient vectors): both sides have the same
        // multidegrees and agree on the monomial system. Here
        // L1 x L2 = (0,1,0) x (1,0,1) = (1, 0, -1) and Q(1,0,-1) = 2.
        let s = sys3("Z1", "Z0 + Z2", "Z0^2 + Z2^2");
        let r = res(&s);
        assert_eq!(r.method, Method::PerturbationInterpolation);
        assert_eq!(r.value, rat(2));

        // same degenerate minor, but with a common zero: Q(1,0,-1) = 0
        let s = sys3("Z1", "Z0 + Z2", "Z0^2 - Z2^2");
        let r = res(&s);
        assert_eq!(r.method, Method::PerturbationInterpolation);
        assert!(r.value.is_zero());
    }

    #[test]
    fn identical_inputs_give_identical_results() {
        let s = sys3("Z0^2 + Z1*Z2", "Z1^2 - Z0*Z2", "Z0 + Z1 + Z2");
        assert_eq!(res(&s), res(&s));
    }
}
