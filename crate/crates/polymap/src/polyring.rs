//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a sorted map keyed by exponent vectors in graded
//! lexicographic order, so iteration, printing, and matrix assembly are
//! deterministic across runs. The zero polynomial is the empty term map and
//! its total degree is `None` rather than an overloaded sentinel value.

pub mod parse;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Errors from parsing and from degree-constrained operations.
#[derive(Debug, Error)]
pub enum PolyError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("system declares {vars} variables but defines {polys} polynomials")]
    ComponentCount { vars: usize, polys: usize },
    #[error("component {} is constant or zero; every component must have total degree >= 1", .index + 1)]
    ConstantComponent { index: usize },
    #[error("homogenization degree {given} is smaller than the polynomial degree {needed}")]
    DegreeTooSmall { given: u32, needed: u32 },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// An exponent vector: one monomial `x^a` of a fixed arity.
///
/// Ordered by total degree first, then lexicographically on the powers, so a
/// `BTreeMap<Exponent, _>` iterates monomials in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(powers: Vec<u32>) -> Self {
        Exponent(powers)
    }

    pub fn zero(arity: usize) -> Self {
        Exponent(vec![0; arity])
    }

    /// The exponent of the monomial `x_i^k`.
    pub fn axis(arity: usize, i: usize, k: u32) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut p = vec![0; arity];
        p[i] = k;
        Exponent(p)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn powers(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of the product of the two monomials.
    pub fn mul(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.0.len(), other.0.len(), "arity mismatch");
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of the given arity and exact total degree, ascending
/// in the same graded-lex order that `Exponent` sorts by.
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Exponent> {
    fn rec(arity: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if arity == 1 {
            prefix.push(d);
            out.push(Exponent::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            rec(arity - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    assert!(arity >= 1, "arity must be positive");
    let mut out = Vec::new();
    rec(arity, d, &mut Vec::with_capacity(arity), &mut out);
    out
}

/// A sparse multivariate polynomial over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

fn insert_add(map: &mut BTreeMap<Exponent, BigRational>, e: Exponent, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self::monomial(Exponent::zero(arity), c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    /// The single monomial `c * x^e`; the zero polynomial when `c == 0`.
    pub fn monomial(e: Exponent, c: BigRational) -> Self {
        let arity = e.arity();
        assert!(arity >= 1, "arity must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { arity, terms }
    }

    /// The variable `x_i`.
    pub fn variable(arity: usize, i: usize) -> Self {
        Self::monomial(Exponent::axis(arity, i, 1), BigRational::one())
    }

    /// Sums an iterator of `(exponent, coefficient)` pairs; duplicates add up.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.arity(), arity, "exponent arity mismatch");
            insert_add(&mut map, e, c);
        }
        MultiPoly { arity, terms: map }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// The coefficient of `x^e` (zero when absent).
    pub fn coeff(&self, e: &Exponent) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial ("minus infinity").
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|e| e.total_degree())
    }

    /// `Some(d)` when every term has total degree exactly `d`; `None` for the
    /// zero polynomial or an inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.keys().all(|e| e.total_degree() == d).then_some(d)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.arity);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.arity, "evaluation point arity mismatch");
        let pows = rational_power_tables(point, self.max_powers());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &a) in e.powers().iter().enumerate() {
                if a > 0 {
                    t *= &pows[i][a as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Floating-point evaluation at a complex point (numeric harness only).
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.arity, "evaluation point arity mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (i, &a) in e.powers().iter().enumerate() {
                if a > 0 {
                    t *= point[i].powi(a as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Homogenizes to degree `d`, inserting the new variable `Z0` in front:
    /// each term `x^a` becomes `Z0^(d - |a|) * x^a`.
    pub fn homogenize(&self, d: u32) -> Result<MultiPoly, PolyError> {
        let deg = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        if d < deg {
            return Err(PolyError::DegreeTooSmall { given: d, needed: deg });
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut p = Vec::with_capacity(self.arity + 1);
            p.push(d - e.total_degree());
            p.extend_from_slice(e.powers());
            terms.insert(Exponent::new(p), c.clone());
        }
        Ok(MultiPoly { arity: self.arity + 1, terms })
    }

    /// Substitutes 1 for the first variable and drops it; inverse of
    /// `homogenize` on its image.
    pub fn dehomogenize(&self) -> MultiPoly {
        assert!(self.arity >= 2, "dehomogenize needs a homogenizing variable");
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            insert_add(&mut map, Exponent::new(e.powers()[1..].to_vec()), c.clone());
        }
        MultiPoly { arity: self.arity - 1, terms: map }
    }

    /// The sum of the terms of maximal total degree.
    pub fn leading_form(&self) -> Result<MultiPoly, PolyError> {
        let deg = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `subs[i]` for variable `i`. All `subs` must share one
    /// arity, which becomes the arity of the result.
    pub fn compose(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.arity, "compose needs one substitute per variable");
        let m = subs[0].arity();
        assert!(subs.iter().all(|p| p.arity() == m), "substitutes must share arity");
        let maxp = self.max_powers();
        let pows: Vec<Vec<MultiPoly>> = subs
            .iter()
            .zip(&maxp)
            .map(|(p, &mx)| {
                let mut v = vec![MultiPoly::one(m)];
                for _ in 0..mx {
                    let next = v.last().unwrap() * p;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = MultiPoly::zero(m);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(m, c.clone());
            for (i, &a) in e.powers().iter().enumerate() {
                if a > 0 {
                    t = &t * &pows[i][a as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renders with the given variable names; `parse::parse_poly` reads the
    /// result back.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        assert_eq!(names.len(), self.arity, "need one name per variable");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &a) in e.powers().iter().enumerate() {
                if a == 1 {
                    factors.push(names[i].as_ref().to_string());
                } else if a > 1 {
                    factors.push(format!("{}^{}", names[i].as_ref(), a));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Largest power of each variable over all terms.
    fn max_powers(&self) -> Vec<u32> {
        let mut maxp = vec![0u32; self.arity];
        for e in self.terms.keys() {
            for (m, &a) in maxp.iter_mut().zip(e.powers()) {
                *m = (*m).max(a);
            }
        }
        maxp
    }
}

fn rational_power_tables(point: &[BigRational], maxp: Vec<u32>) -> Vec<Vec<BigRational>> {
    point
        .iter()
        .zip(&maxp)
        .map(|(x, &m)| {
            let mut v = Vec::with_capacity(m as usize + 1);
            v.push(BigRational::one());
            for _ in 0..m {
                let next = v.last().unwrap() * x;
                v.push(next);
            }
            v
        })
        .collect()
}

impl<'a, 'b> Add<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in +");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_add(&mut terms, e.clone(), c.clone());
        }
        MultiPoly { arity: self.arity, terms }
    }
}

impl<'a, 'b> Sub<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in -");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            insert_add(&mut terms, e.clone(), -c.clone());
        }
        MultiPoly { arity: self.arity, terms }
    }
}

impl<'a, 'b> Mul<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in *");
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                insert_add(&mut terms, ea.mul(eb), ca * cb);
            }
        }
        MultiPoly { arity: self.arity, terms }
    }
}

impl<'a> Neg for &'a MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// A polynomial mapping `F = (F_1, ..., F_n): C^n -> C^n` with every
/// component of total degree at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<MultiPoly>,
    degrees: Vec<u32>,
}

impl PolyMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<PolyMap, PolyError> {
        let n = components.len();
        assert!(n >= 1, "a polynomial map needs at least one component");
        for p in &components {
            assert_eq!(p.arity(), n, "component arity must equal the number of components");
        }
        let mut degrees = Vec::with_capacity(n);
        for (i, p) in components.iter().enumerate() {
            match p.total_degree() {
                Some(d) if d >= 1 => degrees.push(d),
                _ => return Err(PolyError::ConstantComponent { index: i }),
            }
        }
        Ok(PolyMap { components, degrees })
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `d_1 * ... * d_n`, the Bezout bound for the geometric degree.
    pub fn bezout(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn min_degree(&self) -> u32 {
        *self.degrees.iter().min().expect("map has at least one component")
    }
}

/// An invertible integer change of variables `z_i -> sum_j m[i][j] z_j`
/// together with the transformed map.
#[derive(Clone, Debug)]
pub struct LinearChange {
    pub matrix: Vec<Vec<i64>>,
    pub map: PolyMap,
}

/// Applies an invertible matrix to the variables of `F`.
pub fn apply_linear_change(f: &PolyMap, matrix: &[Vec<i64>]) -> PolyMap {
    let n = f.n();
    assert_eq!(matrix.len(), n, "matrix must be n x n");
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be n x n");
    }
    assert!(det_i128(matrix) != 0, "matrix must be invertible");
    let subs: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::from_terms(
                n,
                (0..n).map(|j| {
                    (Exponent::axis(n, j, 1), BigRational::from_integer(matrix[i][j].into()))
                }),
            )
        })
        .collect();
    let components = f.components.iter().map(|p| p.compose(&subs)).collect();
    let g = PolyMap::new(components).expect("invertible linear change preserves degrees");
    assert_eq!(g.degrees, f.degrees, "linear change must preserve degrees");
    g
}

/// Draws small random integer matrices until one is invertible, then applies
/// it to the variables of `F`. Deterministic for a fixed seed.
pub fn random_linear_change(f: &PolyMap, seed: u64) -> LinearChange {
    let n = f.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrix = loop {
        let m: Vec<Vec<i64>> =
            (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if det_i128(&m) != 0 {
            break m;
        }
    };
    let map = apply_linear_change(f, &matrix);
    LinearChange { matrix, map }
}

/// Exact determinant by Laplace expansion; the matrices here are tiny.
fn det_i128(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut det = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()
            })
            .collect();
        let s = if j % 2 == 0 { 1 } else { -1 };
        det += s * (m[0][j] as i128) * det_i128(&minor);
    }
    det
}

#[cfg(test)]
mod tests {
    use super::parse::{parse_poly, parse_system};
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    const Z: [&str; 2] = ["z1", "z2"];

    fn p2(src: &str) -> MultiPoly {
        parse_poly(src, &Z).unwrap()
    }

    #[test]
    fn parse_reads_degrees_in_declaration_order() {
        let s = parse_system("vars: z1 z2\nF1 = z1\nF2 = z1*z2 - 1").unwrap();
        assert_eq!(s.map.n(), 2);
        assert_eq!(s.map.degrees(), &[1, 2]);
        assert_eq!(s.var_names, vec!["z1", "z2"]);
        assert_eq!(s.poly_names, vec!["F1", "F2"]);

        let s = parse_system("vars: z1 z2\nF1 = z1^2\nF2 = z2^2").unwrap();
        assert_eq!(s.map.degrees(), &[2, 2]);
    }

    #[test]
    fn parse_rejects_constant_component() {
        let err = parse_system("vars: z1 z2\nF1 = 3/2\nF2 = z2").unwrap_err();
        assert!(matches!(err, PolyError::ConstantComponent { index: 0 }));
    }

    #[test]
    fn parse_rejects_component_count_mismatch() {
        let err = parse_system("vars: z1 z2\nF1 = z1").unwrap_err();
        assert!(matches!(err, PolyError::ComponentCount { vars: 2, polys: 1 }));
    }

    #[test]
    fn product_of_conjugates() {
        let lhs = &p2("z1 + 1") * &p2("z1 - 1");
        assert_eq!(lhs, p2("z1^2 - 1"));
    }

    #[test]
    fn evaluate_is_exact() {
        let p = p2("z1*z2 - 1");
        assert_eq!(p.eval_rational(&[rat(2), rat(3)]), rat(5));
        assert_eq!(p.eval_rational(&[q(1, 2), rat(2)]), rat(0));
    }

    #[test]
    fn scaling_by_zero_gives_zero() {
        let p = p2("z1^2 + 3/2*z2");
        assert!(p.scale(&BigRational::zero()).is_zero());
    }

    #[test]
    fn homogenize_examples() {
        let zvars = ["Z0", "Z1", "Z2"];
        let h = p2("z1*z2 - 1").homogenize(2).unwrap();
        assert_eq!(h, parse_poly("Z1*Z2 - Z0^2", &zvars).unwrap());
        assert_eq!(h.homogeneous_degree(), Some(2));

        let h = p2("z1").homogenize(1).unwrap();
        assert_eq!(h, parse_poly("Z1", &zvars).unwrap());

        let h = p2("z1^2 - z2").homogenize(2).unwrap();
        assert_eq!(h, parse_poly("Z1^2 - Z0*Z2", &zvars).unwrap());
    }

    #[test]
    fn homogenize_rejects_small_degree() {
        let err = p2("z1*z2 - 1").homogenize(1).unwrap_err();
        assert!(matches!(err, PolyError::DegreeTooSmall { given: 1, needed: 2 }));
        let err = MultiPoly::zero(2).homogenize(3).unwrap_err();
        assert!(matches!(err, PolyError::ZeroPolynomial));
    }

    #[test]
    fn leading_form_examples() {
        assert_eq!(p2("z1*z2 - 1").leading_form().unwrap(), p2("z1*z2"));
        assert_eq!(p2("z1^2 - z2").leading_form().unwrap(), p2("z1^2"));
        assert_eq!(p2("z1*z2^2 + z2").leading_form().unwrap(), p2("z1*z2^2"));
        assert!(matches!(MultiPoly::zero(2).leading_form(), Err(PolyError::ZeroPolynomial)));
    }

    #[test]
    fn identity_change_keeps_map() {
        let f = parse_system("vars: z1 z2\nF1 = z1^2\nF2 = z1*z2 - 1").unwrap().map;
        let g = apply_linear_change(&f, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(g, f);
    }

    #[test]
    fn swap_change_swaps_variables() {
        let f = parse_system("vars: z1 z2\nF1 = z1\nF2 = z2").unwrap().map;
        let g = apply_linear_change(&f, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(g.components()[0], p2("z2"));
        assert_eq!(g.components()[1], p2("z1"));
    }

    #[test]
    fn random_change_preserves_degrees() {
        let f = parse_system("vars: z1 z2\nF1 = z1*z2^2 + z2\nF2 = z1^3 - z2").unwrap().map;
        for seed in 0..6 {
            let ch = random_linear_change(&f, seed);
            assert_eq!(ch.map.degrees(), f.degrees());
            assert!(det_i128(&ch.matrix) != 0);
        }
    }

    #[test]
    fn bezout_and_min_degree() {
        let f = parse_system("vars: z1 z2\nF1 = z1*z2^2 + z2\nF2 = z1^2 - z2").unwrap().map;
        assert_eq!(f.bezout(), BigInt::from(6));
        assert_eq!(f.min_degree(), 2);
    }

    #[test]
    fn monomial_enumeration_is_graded_lex() {
        let mons = monomials_of_degree(3, 2);
        assert_eq!(mons.len(), 6);
        assert_eq!(mons[0].powers(), &[0, 0, 2]);
        assert_eq!(mons[5].powers(), &[2, 0, 0]);
        let mut sorted = mons.clone();
        sorted.sort();
        assert_eq!(sorted, mons);
    }

    #[test]
    fn render_is_parseable() {
        let p = p2("-z1^2 + 3/2*z1*z2 - 1");
        assert_eq!(p.render(&Z), "-z1^2 + 3/2*z1*z2 - 1");
        assert_eq!(MultiPoly::zero(2).render(&Z), "0");
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    fn arb_poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((proptest::collection::vec(0u32..=3, arity), arb_rat()), 0..6)
            .prop_map(move |terms| {
                MultiPoly::from_terms(
                    arity,
                    terms.into_iter().map(|(p, c)| (Exponent::new(p), c)),
                )
            })
    }

    fn arb_point(arity: usize) -> impl Strategy<Value = Vec<BigRational>> {
        proptest::collection::vec(arb_rat(), arity..=arity)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn homogenize_roundtrip(p in arb_poly(2), extra in 0u32..3) {
            prop_assume!(!p.is_zero());
            let d = p.total_degree().unwrap() + extra;
            let h = p.homogenize(d).unwrap();
            prop_assert_eq!(h.homogeneous_degree(), Some(d));
            prop_assert_eq!(h.dehomogenize(), p);
        }

        #[test]
        fn evaluation_is_multiplicative(p in arb_poly(2), r in arb_poly(2), x in arb_point(2)) {
            prop_assert_eq!(
                (&p * &r).eval_rational(&x),
                p.eval_rational(&x) * r.eval_rational(&x)
            );
        }

        #[test]
        fn render_parse_roundtrip(p in arb_poly(3)) {
            let names = ["z1", "z2", "z3"];
            prop_assert_eq!(parse_poly(&p.render(&names), &names).unwrap(), p);
        }
    }
}
