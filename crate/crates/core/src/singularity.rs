//! Milnor and Tjurina numbers, quasi-homogeneous weights, the weight grading
//! of `T¹`, and Tjurina numbers of complete intersections.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_basis, standard_basis, Dimension, StandardBasis, Staircase, VectorPoly};
use crate::linalg::Matrix;
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

/// Equations of a germ at the origin: one for a hypersurface, several for a
/// complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermInput {
    equations: Vec<Polynomial>,
}

impl GermInput {
    pub fn new(equations: Vec<Polynomial>) -> Result<Self> {
        let first = equations.first().ok_or(Error::EmptyGenerators)?;
        for f in &equations {
            if !f.same_ring(first) {
                return Err(Error::RingMismatch("equations differ in ring".into()));
            }
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !f.constant_term().is_zero() {
                return Err(Error::NotAtOrigin(f.to_string()));
            }
        }
        Ok(GermInput { equations })
    }

    pub fn hypersurface(f: Polynomial) -> Result<Self> {
        GermInput::new(vec![f])
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn nvars(&self) -> usize {
        self.equations[0].nvars()
    }

    pub fn is_hypersurface(&self) -> bool {
        self.equations.len() == 1
    }
}

/// Positive integer weights `w` with every term of `f` of weighted degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightData {
    pub weights: Vec<i64>,
    pub degree: i64,
}

impl WeightData {
    pub fn weight_of(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }
}

/// Monomial basis of the Tjurina algebra `O/(f, ∂f)`, graded when `f` is
/// quasi-homogeneous in the given coordinates.
#[derive(Clone, Debug)]
pub struct GradedT1 {
    germ: Polynomial,
    pub basis: Vec<Monomial>,
    /// Weight of each basis monomial, present iff `weight_data` is.
    pub weights: Option<Vec<i64>>,
    pub weight_data: Option<WeightData>,
    pub tau: Dimension,
    ideal: StandardBasis,
    stairs: Staircase,
}

impl GradedT1 {
    pub fn germ(&self) -> &Polynomial {
        &self.germ
    }

    pub fn standard_basis(&self) -> &StandardBasis {
        &self.ideal
    }

    pub fn staircase(&self) -> &Staircase {
        &self.stairs
    }

    pub fn is_graded(&self) -> bool {
        self.weight_data.is_some()
    }

    /// Coordinates of the class of `p` in the monomial basis.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Coefficient>> {
        self.ideal
            .quotient_coordinates(&VectorPoly::scalar(p.clone()), &self.stairs)?
            .ok_or(Error::NonIsolated)
    }
}

fn hypersurface(f: &Polynomial) -> Result<()> {
    GermInput::hypersurface(f.clone()).map(|_| ())
}

/// Milnor number `dim O/(∂f)` under the default local order.
pub fn milnor_number(f: &Polynomial) -> Result<Dimension> {
    hypersurface(f)?;
    milnor_number_with_order(f, &MonomialOrder::NegDegRevLex)
}

pub fn milnor_number_with_order(f: &Polynomial, order: &MonomialOrder) -> Result<Dimension> {
    let b = ideal_basis(&f.gradient(), order)?;
    Ok(b.staircase().dimension)
}

/// Tjurina ideal `(f, ∂f/∂z_1, …, ∂f/∂z_n)`.
pub fn tjurina_ideal(f: &Polynomial) -> Vec<Polynomial> {
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    gens
}

/// Tjurina number and graded monomial basis of `T¹`.
pub fn tjurina(f: &Polynomial) -> Result<GradedT1> {
    tjurina_with_order(f, &MonomialOrder::NegDegRevLex)
}

pub fn tjurina_with_order(f: &Polynomial, order: &MonomialOrder) -> Result<GradedT1> {
    hypersurface(f)?;
    if order.is_global() {
        return Err(Error::InvalidOrder("the Tjurina algebra needs a local order".into()));
    }
    let ideal = ideal_basis(&tjurina_ideal(f), order)?;
    let stairs = ideal.staircase();
    let basis: Vec<Monomial> = stairs.monomials.iter().map(|(_, m)| m.clone()).collect();
    let weight_data = find_weights(f);
    let weights = weight_data
        .as_ref()
        .filter(|_| stairs.finite)
        .map(|w| basis.iter().map(|m| w.weight_of(m)).collect());
    Ok(GradedT1 {
        germ: f.clone(),
        basis,
        weights,
        weight_data,
        tau: stairs.dimension,
        ideal,
        stairs,
    })
}

pub fn tjurina_number(f: &Polynomial) -> Result<Dimension> {
    Ok(tjurina(f)?.tau)
}

/// Diagonal weights making `f` quasi-homogeneous in the given coordinates.
///
/// Solves `Σ w_i α_i = 1` over the exponent vectors of `f`. When the solution
/// is not unique, the free weights are tied to one parameter chosen at the
/// midpoint of its positivity interval. The result is scaled to a primitive
/// integer vector with `gcd(w, d) = 1`.
pub fn find_weights(f: &Polynomial) -> Option<WeightData> {
    if f.is_zero() {
        return None;
    }
    let n = f.nvars();
    let rows: Vec<Vec<Coefficient>> = f
        .terms()
        .map(|(m, _)| {
            m.exponents()
                .iter()
                .map(|&e| Coefficient::from_integer(e.into()))
                .chain(std::iter::once(Coefficient::one()))
                .collect()
        })
        .collect();
    let mut a = Matrix::from_rows(rows);
    let pivots = a.rref();
    if pivots.contains(&n) {
        return None;
    }
    let mut particular = vec![Coefficient::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = a[(r, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // direction obtained by moving every free weight together
    let mut dir = vec![Coefficient::zero(); n];
    for &fc in &free {
        dir[fc] += Coefficient::one();
        for (r, &pc) in pivots.iter().enumerate() {
            dir[pc] -= &a[(r, fc)];
        }
    }
    let t = positive_parameter(&particular, &dir)?;
    let w: Vec<Coefficient> = particular
        .iter()
        .zip(&dir)
        .map(|(p, d)| p + d * &t)
        .collect();
    if w.iter().any(|x| !x.is_positive()) {
        return None;
    }
    let lcm = w
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<num_bigint::BigInt> = w
        .iter()
        .map(|x| (x * Coefficient::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(lcm.clone(), |acc, x| acc.gcd(x));
    let to_i64 = |x: &num_bigint::BigInt| i64::try_from(x / &g).ok();
    Some(WeightData {
        weights: scaled.iter().map(to_i64).collect::<Option<_>>()?,
        degree: to_i64(&lcm)?,
    })
}

/// A value of `t` with `p + t·d > 0` componentwise (and `t > 0` when `d`
/// moves a free weight).
fn positive_parameter(p: &[Coefficient], d: &[Coefficient]) -> Option<Coefficient> {
    if d.iter().all(Zero::is_zero) {
        return Some(Coefficient::zero());
    }
    let mut lo: Option<Coefficient> = None;
    let mut hi: Option<Coefficient> = None;
    for (pi, di) in p.iter().zip(d) {
        if di.is_zero() {
            if !pi.is_positive() {
                return None;
            }
            continue;
        }
        let bound = -(pi / di);
        if di.is_positive() {
            lo = Some(lo.map_or(bound.clone(), |l: Coefficient| l.max(bound)));
        } else {
            hi = Some(hi.map_or(bound.clone(), |h: Coefficient| h.min(bound)));
        }
    }
    let t = match (lo, hi) {
        (Some(l), Some(h)) if l < h => (l + h) / Coefficient::from_integer(2.into()),
        (Some(_), Some(_)) => return None,
        (Some(l), None) => l + Coefficient::one(),
        (None, Some(h)) => h - Coefficient::one(),
        (None, None) => Coefficient::one(),
    };
    Some(t)
}

/// Basis monomials of `t1` whose weight equals `target`.
pub fn graded_piece(t1: &GradedT1, target: i64) -> Result<Vec<Monomial>> {
    let weights = t1.weights.as_ref().ok_or(Error::NotGraded)?;
    Ok(t1
        .basis
        .iter()
        .zip(weights)
        .filter(|(_, &w)| w == target)
        .map(|(m, _)| m.clone())
        .collect())
}

/// Tjurina number of a complete intersection `f_1 = … = f_k = 0`:
/// `dim O^k / (Jacobian columns + f_i·e_l)` under the local module order.
pub fn icis_tjurina(germ: &GermInput) -> Result<Dimension> {
    Ok(icis_t1(germ)?.staircase().dimension)
}

/// Standard basis of the ICIS `T¹` submodule.
pub fn icis_t1(germ: &GermInput) -> Result<StandardBasis> {
    let k = germ.equations.len();
    let n = germ.nvars();
    if k > n {
        return Err(Error::TooManyEquations {
            equations: k,
            variables: n,
        });
    }
    let mut gens = Vec::with_capacity(n + k * k);
    for j in 0..n {
        let col: Vec<Polynomial> = germ.equations.iter().map(|f| f.derivative(j)).collect();
        gens.push(VectorPoly::new(col)?);
    }
    for f in &germ.equations {
        for l in 0..k {
            gens.push(VectorPoly::unit(f.clone(), l, k));
        }
    }
    let gens: Vec<VectorPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    standard_basis(&gens, &MonomialOrder::NegDegRevLex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &XYZ).unwrap()
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_number(&p("x^4+y^2+z^2")).unwrap(), Dimension::Finite(3));
        let f = parse_poly("x^4 - x^2*y^2 + y^4 + y^5", &["x", "y"]).unwrap();
        assert_eq!(milnor_number(&f).unwrap(), Dimension::Finite(9));
        let g = parse_poly("x^2*y", &["x", "y"]).unwrap();
        assert_eq!(milnor_number(&g).unwrap(), Dimension::Infinite);
    }

    #[test]
    fn tjurina_examples() {
        assert_eq!(tjurina_number(&p("x^3+y^3+z^3+x*y*z")).unwrap(), Dimension::Finite(8));
        assert_eq!(tjurina_number(&p("x^6+y^3+z^2+x*y*z")).unwrap(), Dimension::Finite(10));
        assert_eq!(tjurina_number(&p("x^3+y^3+z^3-3*x*y*z")).unwrap(), Dimension::Infinite);
    }

    #[test]
    fn germ_errors() {
        assert_eq!(milnor_number(&p("0")).unwrap_err(), Error::ZeroPolynomial);
        assert!(matches!(tjurina(&p("x^2+1")), Err(Error::NotAtOrigin(_))));
        assert!(matches!(
            tjurina_with_order(&p("x^2"), &MonomialOrder::DegRevLex),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn weights() {
        let w = find_weights(&p("x^3+y^3+z^3+x*y*z")).unwrap();
        assert_eq!((w.weights, w.degree), (vec![1, 1, 1], 3));
        let w = find_weights(&p("x^6+y^3+z^2+x*y*z")).unwrap();
        assert_eq!((w.weights, w.degree), (vec![1, 2, 3], 6));
        assert_eq!(find_weights(&p("x^4+y^3+z^3+x*y*z")), None);
        let w = find_weights(&p("x^5+y^2+z^2")).unwrap();
        assert_eq!((w.weights, w.degree), (vec![2, 5, 5], 10));
        // underdetermined: x*y alone; free weights tied together
        let w = find_weights(&parse_poly("x*y", &["x", "y"]).unwrap()).unwrap();
        assert_eq!((w.weights, w.degree), (vec![1, 1], 2));
        // negative weight forced: x^2 + x^3*y has w_y = -1/2
        assert_eq!(find_weights(&parse_poly("x^2+x^3*y", &["x", "y"]).unwrap()), None);
    }

    #[test]
    fn graded_pieces() {
        let t1 = tjurina(&p("x^3+y^3+z^3+x*y*z")).unwrap();
        let piece = graded_piece(&t1, 3).unwrap();
        assert_eq!(piece.len(), 1);
        let a3 = tjurina(&p("x^4+y^2+z^2")).unwrap();
        let w = a3.weight_data.clone().unwrap();
        assert_eq!((w.weights.clone(), w.degree), (vec![1, 2, 2], 4));
        assert!(graded_piece(&a3, 4).unwrap().is_empty());
        assert!(graded_piece(&t1, -1).unwrap().is_empty());
        let hyper = tjurina(&p("x^4+y^3+z^3+x*y*z")).unwrap();
        assert_eq!(graded_piece(&hyper, 3).unwrap_err(), Error::NotGraded);
    }

    #[test]
    fn icis_examples() {
        let e8 = GermInput::new(vec![p("x^4+y^4+2*z^2"), p("2*z-x*y")]).unwrap();
        assert_eq!(icis_tjurina(&e8).unwrap(), Dimension::Finite(9));
        let cubic = GermInput::hypersurface(p("x^3+y^3+z^3+x*y*z")).unwrap();
        assert_eq!(icis_tjurina(&cubic).unwrap(), Dimension::Finite(8));
        let smooth = GermInput::new(vec![p("x"), p("y")]).unwrap();
        assert_eq!(icis_tjurina(&smooth).unwrap(), Dimension::Finite(0));
        let too_many = GermInput::new(vec![
            parse_poly("x", &["x"]).unwrap(),
            parse_poly("x^2", &["x"]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(icis_tjurina(&too_many), Err(Error::TooManyEquations { .. })));
    }
}
