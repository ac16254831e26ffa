//! The elimination curve of a polynomial map.
//!
//! For a linear form G = c1 Z1 + ... + cn Zn, the scalar resultant
//! P_G(w, t) = Res(F~_1 - w_1 Z0^{d_1}, ..., F~_n - w_n Z0^{d_n}, G - t Z0)
//! vanishes exactly when the system F(z) = w, G(z) = t is solvable. It is a
//! polynomial in (w, t); slices in t and the full curve are recovered by
//! exact evaluation-interpolation over integer nodes. The construction is
//! legitimate when the homogenized components, Z0 and G share no projective
//! zero, which is certified soundly by a non-zero resultant witness
//! Res(F~_1, ..., F~_n, s0*Z0 + G): that also proves the common zero set of
//! the F~_i at infinity is finite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::interp::newton_interpolate;
use crate::macaulay::{resultant, FormSystem, MacaulayError, ResultantValue};
use crate::polyring::{Exponent, MultiPoly, PolyMap};

/// Default number of s0 draws when certifying one linear form.
pub const DEFAULT_CERT_ATTEMPTS: usize = 16;

/// Default cap on the evaluation grid of the full curve.
pub const DEFAULT_GRID_CAP: usize = 20_000;

/// Random linear-form candidates tried after the coordinate axes.
const EXTRA_G_CANDIDATES: usize = 8;

#[derive(Debug, Error)]
pub enum PgError {
    #[error("could not certify the hyperplane condition for G = {g} after {attempts} attempts")]
    CertificationFailed { g: String, attempts: usize },
    #[error(
        "no linear form could be certified within a budget of {budget} candidates; \
         the projective zero set of the leading forms is likely infinite, so the \
         finiteness hypothesis stays unverified"
    )]
    NoCertifiedForm { budget: usize },
    #[error(
        "the slice at w = ({w}) is identically zero: either the fiber over w \
         is infinite (w lies in the non-properness set) or no certificate \
         holds for this G"
    )]
    ZeroSlice { w: String },
    #[error("full-curve grid needs {size} evaluations, over the cap of {cap}")]
    GridTooLarge { size: BigInt, cap: usize },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

/// A non-zero linear form c1 Z1 + ... + cn Zn in the image coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<BigRational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigRational>) -> LinearForm {
        assert!(coeffs.iter().any(|c| !c.is_zero()), "linear form must be non-zero");
        LinearForm { coeffs }
    }

    /// G = Z_{i+1}.
    pub fn axis(n: usize, i: usize) -> LinearForm {
        assert!(i < n, "axis index out of range");
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[i] = BigRational::one();
        LinearForm { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The form as a polynomial of arity n+1, with Z0 in front (coefficient 0).
    pub fn as_form(&self) -> MultiPoly {
        let n = self.coeffs.len();
        MultiPoly::from_terms(
            n + 1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Exponent::axis(n + 1, i + 1, 1), c.clone())),
        )
    }

    /// Value of the form at an affine point.
    pub fn eval(&self, z: &[BigRational]) -> BigRational {
        assert_eq!(z.len(), self.coeffs.len(), "point arity mismatch");
        self.coeffs.iter().zip(z).map(|(c, x)| c * x).sum()
    }

    /// Rendering in the names Z1, ..., Zn.
    pub fn render(&self) -> String {
        let n = self.coeffs.len();
        let names: Vec<String> = (1..=n).map(|i| format!("Z{i}")).collect();
        MultiPoly::from_terms(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Exponent::axis(n, i, 1), c.clone())),
        )
        .render(&names)
    }
}

/// A sound witness that the homogenized components, Z0 and G have no common
/// projective zero: Res(F~_1, ..., F~_n, s0*Z0 + G) != 0. The witness also
/// proves that the common zero set of the F~_i is finite, since a
/// positive-dimensional projective set would meet the hyperplane.
#[derive(Clone, Debug)]
pub struct StarCertificate {
    pub g: LinearForm,
    pub s0: BigRational,
    pub witness: ResultantValue,
    pub implies_finiteness: bool,
}

/// F~_i - w_i * Z0^{d_i} for a fixed rational w.
fn shifted_forms(f: &PolyMap, w: &[BigRational]) -> Vec<MultiPoly> {
    let n = f.n();
    f.components()
        .iter()
        .zip(f.degrees())
        .zip(w)
        .map(|((p, &d), wi)| {
            let h = p.homogenize(d).expect("map components are non-zero");
            &h - &MultiPoly::monomial(Exponent::axis(n + 1, 0, d), wi.clone())
        })
        .collect()
}

/// a * Z0 + G as a form of arity n+1.
fn hyperplane(g: &LinearForm, a: &BigRational) -> MultiPoly {
    &g.as_form() + &MultiPoly::monomial(Exponent::axis(g.n() + 1, 0, 1), a.clone())
}

/// Tries random small-integer s0 until the witness resultant is non-zero.
pub fn certify_star(
    f: &PolyMap,
    g: &LinearForm,
    attempts: usize,
    seed: u64,
    max_columns: usize,
) -> Result<StarCertificate, PgError> {
    assert_eq!(g.n(), f.n(), "form arity must match the map");
    let homog: Vec<MultiPoly> = f
        .components()
        .iter()
        .zip(f.degrees())
        .map(|(p, &d)| p.homogenize(d).expect("map components are non-zero"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let s0 = BigRational::from_integer(rng.gen_range(-9i64..=9).into());
        let mut forms = homog.clone();
        forms.push(hyperplane(g, &s0));
        let r = resultant(&FormSystem::new(forms)?, max_columns)?;
        if !r.value.is_zero() {
            return Ok(StarCertificate { g: g.clone(), s0, witness: r, implies_finiteness: true });
        }
    }
    Err(PgError::CertificationFailed { g: g.render(), attempts })
}

/// Tries G = Z1, ..., Zn, then random small-integer forms, returning the
/// first certified one. Deterministic for a fixed seed.
pub fn choose_g(
    f: &PolyMap,
    seed: u64,
    attempts: usize,
    max_columns: usize,
) -> Result<(LinearForm, StarCertificate), PgError> {
    let n = f.n();
    let budget = n + EXTRA_G_CANDIDATES;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..budget {
        let g = if k < n {
            LinearForm::axis(n, k)
        } else {
            loop {
                let coeffs: Vec<BigRational> = (0..n)
                    .map(|_| BigRational::from_integer(rng.gen_range(-5i64..=5).into()))
                    .collect();
                if coeffs.iter().any(|c| !c.is_zero()) {
                    break LinearForm::new(coeffs);
                }
            }
        };
        match certify_star(f, &g, attempts, rng.gen(), max_columns) {
            Ok(cert) => return Ok((g, cert)),
            Err(PgError::CertificationFailed { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(PgError::NoCertifiedForm { budget })
}

/// The univariate polynomial T -> P_G(w, T), interpolated exactly.
#[derive(Clone, Debug)]
pub struct PGSlice {
    pub w: Vec<BigRational>,
    pub poly_in_t: MultiPoly,
    pub degree_bound_used: BigInt,
    pub nodes: Vec<BigRational>,
}

impl PGSlice {
    /// deg_T of the slice. A certified G rules out the zero slice at w = 0
    /// and at generic w; over the non-properness set a slice can still be
    /// identically zero, and `pg_slice` reports that case as an error.
    pub fn deg_t(&self) -> u32 {
        self.poly_in_t.total_degree().expect("slice polynomial is non-zero")
    }
}

/// Evaluates Res(F~_i - w_i Z0^{d_i}, G - t Z0) at t = 0, 1, ..., d1*...*dn
/// and interpolates. The degree in T equals the number of fiber points over
/// w counted with multiplicities, when that fiber is finite.
pub fn pg_slice(
    f: &PolyMap,
    g: &LinearForm,
    w: &[BigRational],
    max_columns: usize,
) -> Result<PGSlice, PgError> {
    let n = f.n();
    assert_eq!(w.len(), n, "w needs one coordinate per component");
    assert_eq!(g.n(), n, "form arity must match the map");
    let shifted = shifted_forms(f, w);
    let res_at = |t: &BigRational| -> Result<BigRational, PgError> {
        let mut forms = shifted.clone();
        forms.push(hyperplane(g, &(-t)));
        Ok(resultant(&FormSystem::new(forms)?, max_columns)?.value)
    };

    let mut nodes = vec![BigRational::zero()];
    let mut values = vec![res_at(&nodes[0])?];
    // The first evaluation went through the matrix-size guard, and the node
    // count never exceeds the column count, so the bound fits a machine word.
    let bound = f.bezout().to_usize().expect("degree bound fits after a successful resultant");
    for t in 1..=bound {
        let tr = BigRational::from_integer(BigInt::from(t));
        values.push(res_at(&tr)?);
        nodes.push(tr);
    }

    let coeffs = newton_interpolate(&nodes, &values);
    let poly_in_t = MultiPoly::from_terms(
        1,
        coeffs.into_iter().enumerate().map(|(k, c)| (Exponent::axis(1, 0, k as u32), c)),
    );
    if poly_in_t.is_zero() {
        let ws = w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        return Err(PgError::ZeroSlice { w: ws });
    }
    assert!(
        poly_in_t.total_degree().unwrap() as usize <= bound,
        "slice degree exceeds its bound"
    );
    Ok(PGSlice { w: w.to_vec(), poly_in_t, degree_bound_used: f.bezout(), nodes })
}

/// The full curve P_G in the variables (W1, ..., Wn, T).
#[derive(Clone, Debug)]
pub struct PGFull {
    pub poly: MultiPoly,
    pub w_degree_bounds: Vec<BigInt>,
    pub t_degree_bound: BigInt,
}

impl PGFull {
    pub fn n(&self) -> usize {
        self.poly.arity() - 1
    }

    /// Largest power of T; `None` only for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        let last = self.poly.arity() - 1;
        self.poly.terms().map(|(e, _)| e.powers()[last]).max()
    }

    /// Exact substitution W = w, leaving a univariate polynomial in T.
    pub fn slice_at(&self, w: &[BigRational]) -> MultiPoly {
        let n = self.n();
        assert_eq!(w.len(), n, "w needs one coordinate per component");
        let mut subs: Vec<MultiPoly> =
            w.iter().map(|wi| MultiPoly::constant(1, wi.clone())).collect();
        subs.push(MultiPoly::variable(1, 0));
        self.poly.compose(&subs)
    }
}

/// Tensor-grid interpolation of the full curve. Degree bounds: each W_i up
/// to prod_{j != i} d_j, T up to prod_j d_j.
pub fn pg_full(
    f: &PolyMap,
    g: &LinearForm,
    grid_cap: usize,
    max_columns: usize,
) -> Result<PGFull, PgError> {
    let n = f.n();
    assert_eq!(g.n(), n, "form arity must match the map");
    let degrees = f.degrees();
    let t_bound = f.bezout();
    let w_bounds: Vec<BigInt> = (0..n)
        .map(|i| {
            degrees
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &d)| BigInt::from(d))
                .product()
        })
        .collect();

    let mut size: BigInt = &t_bound + 1;
    for b in &w_bounds {
        size *= b + 1;
    }
    if size > BigInt::from(grid_cap) {
        return Err(PgError::GridTooLarge { size, cap: grid_cap });
    }

    let int_nodes = |b: &BigInt| -> Vec<BigRational> {
        (0..=b.to_usize().expect("grid cap bounds the node count"))
            .map(|k| BigRational::from_integer(BigInt::from(k)))
            .collect()
    };
    let mut nodes: Vec<Vec<BigRational>> = w_bounds.iter().map(int_nodes).collect();
    nodes.push(int_nodes(&t_bound));

    let mut eval = |point: &[BigRational]| -> Result<BigRational, PgError> {
        let mut forms = shifted_forms(f, &point[..n]);
        forms.push(hyperplane(g, &(-&point[n])));
        Ok(resultant(&FormSystem::new(forms)?, max_columns)?.value)
    };
    let mut prefix = Vec::with_capacity(n + 1);
    let poly = tensor_interpolate(0, &nodes, &mut prefix, &mut eval)?;

    // the interpolation grid enforces the bounds; check the result anyway
    for (e, _) in poly.terms() {
        for (i, &p) in e.powers().iter().enumerate() {
            let bound = if i < n { &w_bounds[i] } else { &t_bound };
            assert!(BigInt::from(p) <= *bound, "curve degree exceeds its bound");
        }
    }
    Ok(PGFull { poly, w_degree_bounds: w_bounds, t_degree_bound: t_bound })
}

/// Interpolates variables `var..` over the node grid, one dimension at a
/// time; returns a polynomial in the remaining variables.
fn tensor_interpolate(
    var: usize,
    nodes: &[Vec<BigRational>],
    prefix: &mut Vec<BigRational>,
    eval: &mut impl FnMut(&[BigRational]) -> Result<BigRational, PgError>,
) -> Result<MultiPoly, PgError> {
    let remaining = nodes.len() - var;
    if remaining == 1 {
        let mut values = Vec::with_capacity(nodes[var].len());
        for x in &nodes[var] {
            prefix.push(x.clone());
            let v = eval(prefix);
            prefix.pop();
            values.push(v?);
        }
        let coeffs = newton_interpolate(&nodes[var], &values);
        return Ok(MultiPoly::from_terms(
            1,
            coeffs.into_iter().enumerate().map(|(k, c)| (Exponent::axis(1, 0, k as u32), c)),
        ));
    }

    let mut polys = Vec::with_capacity(nodes[var].len());
    for x in &nodes[var] {
        prefix.push(x.clone());
        let p = tensor_interpolate(var + 1, nodes, prefix, eval);
        prefix.pop();
        polys.push(p?);
    }
    let mut exps: std::collections::BTreeSet<Exponent> = std::collections::BTreeSet::new();
    for p in &polys {
        for (e, _) in p.terms() {
            exps.insert(e.clone());
        }
    }
    let mut terms = Vec::new();
    for e in exps {
        let values: Vec<BigRational> = polys.iter().map(|p| p.coeff(&e)).collect();
        let coeffs = newton_interpolate(&nodes[var], &values);
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut powers = Vec::with_capacity(remaining);
            powers.push(k as u32);
            powers.extend_from_slice(e.powers());
            terms.push((Exponent::new(powers), c));
        }
    }
    Ok(MultiPoly::from_terms(remaining, terms))
}
