//! Derivations tangent to a hypersurface germ, their induced action on `T¹`,
//! and the first-order tangent space of the modular stratum.
//!
//! A derivation `v = Σ a_i ∂_i` with `v(f) = h·f` acts on the Tjurina algebra
//! by `v·[g] = [v(g) − h·g]`. Under the miniversal identification of the base
//! tangent space with `T¹`, the modular tangent space is the common kernel of
//! these maps over a generating set of `T⁰`. For the Euler field of a
//! quasi-homogeneous germ the map is diagonal with entries `w(g) − d`, so its
//! kernel is exactly the weight-`d` piece.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{syzygies, VectorPoly};
use crate::linalg::{EchelonBasis, Matrix};
use crate::poly::{integer, Coefficient, Monomial, Polynomial};
use crate::singularity::{find_weights, graded_piece, milnor_number, tjurina, GradedT1};

/// Vector field `Σ a_i ∂_i` tangent to `{f = 0}` with `v(f) = h·f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    coefficients: Vec<Polynomial>,
    cofactor: Polynomial,
}

impl Derivation {
    /// Fails unless `Σ a_i ∂_i f = h·f` holds exactly.
    pub fn new(coefficients: Vec<Polynomial>, cofactor: Polynomial, f: &Polynomial) -> Result<Self> {
        if coefficients.len() != f.nvars() {
            return Err(Error::RingMismatch(format!(
                "{} coefficients for {} variables",
                coefficients.len(),
                f.nvars()
            )));
        }
        let v = Derivation {
            coefficients,
            cofactor,
        };
        if v.apply(f) != &v.cofactor * f {
            return Err(Error::Precondition("derivation is not tangent to f".into()));
        }
        Ok(v)
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn cofactor(&self) -> &Polynomial {
        &self.cofactor
    }

    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        self.coefficients
            .iter()
            .enumerate()
            .fold(Polynomial::zero(g.vars().clone()), |acc, (i, a)| {
                &acc + &(a * &g.derivative(i))
            })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }

    /// `p · v`, again tangent with cofactor `p·h`.
    pub fn scaled_by(&self, p: &Polynomial) -> Derivation {
        Derivation {
            coefficients: self.coefficients.iter().map(|a| p * a).collect(),
            cofactor: p * &self.cofactor,
        }
    }

    /// True when every coefficient vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.coefficients.iter().all(|a| a.constant_term().is_zero())
    }

    fn proportional_to(&self, other: &Derivation) -> bool {
        let mine = self.coefficients.iter().chain(std::iter::once(&self.cofactor));
        let theirs = other.coefficients.iter().chain(std::iter::once(&other.cofactor));
        let pairs: Vec<(&Polynomial, &Polynomial)> = mine.zip(theirs).collect();
        let Some(ratio) = pairs.iter().find_map(|(a, b)| {
            let (m, c) = a.terms().next()?;
            let d = b.coefficient(m);
            (!d.is_zero()).then(|| c / d)
        }) else {
            return false;
        };
        pairs.iter().all(|(a, b)| **a == b.scale(&ratio))
    }
}

/// Euler field `Σ w_i z_i ∂_i` of a quasi-homogeneous germ, cofactor `d`.
pub fn euler_field(f: &Polynomial) -> Option<Derivation> {
    let w = find_weights(f)?;
    let coefficients = (0..f.nvars())
        .map(|i| {
            Polynomial::monomial(f.vars().clone(), Monomial::var(f.nvars(), i), integer(w.weights[i]))
        })
        .collect();
    let cofactor = Polynomial::constant(f.vars().clone(), integer(w.degree));
    Derivation::new(coefficients, cofactor, f).ok()
}

/// Hamiltonian fields `(∂_j f)∂_i − (∂_i f)∂_j` for `i < j`, cofactor 0.
pub fn hamiltonian_fields(f: &Polynomial) -> Vec<Derivation> {
    let n = f.nvars();
    let grad = f.gradient();
    let zero = Polynomial::zero(f.vars().clone());
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![zero.clone(); n];
            a[i] = grad[j].clone();
            a[j] = -&grad[i];
            let v = Derivation {
                coefficients: a,
                cofactor: zero.clone(),
            };
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// Module generators of `T⁰`, the derivations tangent to `{f = 0}`.
///
/// Built from the syzygies `(a_1, …, a_n, b)` of `(∂_1 f, …, ∂_n f, f)` with
/// `h = −b`. The Euler field (when weights exist) and the Hamiltonian fields
/// are listed first; syzygy generators proportional to one already listed
/// are skipped.
pub fn derivation_module(f: &Polynomial) -> Result<Vec<Derivation>> {
    let t1 = tjurina(f)?;
    if t1.tau.is_infinite() {
        return Err(Error::NonIsolated);
    }
    derivations_unchecked(f)
}

fn derivations_unchecked(f: &Polynomial) -> Result<Vec<Derivation>> {
    let n = f.nvars();
    let mut gens: Vec<VectorPoly> = f.gradient().into_iter().map(VectorPoly::scalar).collect();
    gens.push(VectorPoly::scalar(f.clone()));
    let mut out: Vec<Derivation> = Vec::new();
    out.extend(euler_field(f));
    out.extend(hamiltonian_fields(f));
    for s in syzygies(&gens)? {
        let mut comps = s.into_components();
        let b = comps.pop().expect("n + 1 components");
        debug_assert_eq!(comps.len(), n);
        let v = Derivation::new(comps, -b, f)?;
        if v.is_zero() || out.iter().any(|w| v.proportional_to(w)) {
            continue;
        }
        out.push(v);
    }
    Ok(out)
}

/// Matrix of `[g] ↦ [v(g) − h·g]` on `T¹`; column `j` holds the image of the
/// `j`-th basis monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    pub entries: Matrix,
    pub basis: Vec<Monomial>,
}

impl ActionMatrix {
    /// All eigenvalues zero: the characteristic polynomial is `t^τ`.
    pub fn is_nilpotent(&self) -> bool {
        let c = self.entries.charpoly();
        c[..c.len() - 1].iter().all(Zero::is_zero)
    }
}

pub fn action_matrix(v: &Derivation, t1: &GradedT1, f: &Polynomial) -> Result<ActionMatrix> {
    twisted_action(v, t1, f, true)
}

/// The action without the cofactor correction, `[g] ↦ [v(g)]`.
pub fn untwisted_action_matrix(v: &Derivation, t1: &GradedT1, f: &Polynomial) -> Result<ActionMatrix> {
    twisted_action(v, t1, f, false)
}

fn twisted_action(v: &Derivation, t1: &GradedT1, f: &Polynomial, twist: bool) -> Result<ActionMatrix> {
    if t1.germ() != f {
        return Err(Error::BasisMismatch("T¹ basis was computed for a different germ".into()));
    }
    if v.coefficients.len() != f.nvars() || !v.cofactor.same_ring(f) {
        return Err(Error::BasisMismatch("derivation ring differs from the germ".into()));
    }
    if t1.tau.is_infinite() {
        return Err(Error::NonIsolated);
    }
    let tau = t1.basis.len();
    let mut entries = Matrix::zeros(tau, tau);
    for (j, g) in t1.basis.iter().enumerate() {
        let gp = Polynomial::monomial(f.vars().clone(), g.clone(), integer(1));
        let mut image = v.apply(&gp);
        if twist {
            image = &image - &(&v.cofactor * &gp);
        }
        for (i, c) in t1.coordinates(&image)?.into_iter().enumerate() {
            entries[(i, j)] = c;
        }
    }
    Ok(ActionMatrix {
        entries,
        basis: t1.basis.clone(),
    })
}

/// Zariski tangent space of the modular stratum in `T¹` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularTangent {
    pub dimension: usize,
    /// Rational vectors over the `T¹` monomial basis.
    #[serde(serialize_with = "serialize_vectors")]
    pub kernel_basis: Vec<Vec<Coefficient>>,
    /// Kernel dimension without the cofactor twist, reported for comparison.
    pub untwisted_dimension: usize,
    pub generator_count: usize,
}

impl ModularTangent {
    /// The twisted and untwisted conventions disagree on this germ.
    pub fn convention_sensitive(&self) -> bool {
        self.dimension != self.untwisted_dimension
    }
}

fn serialize_vectors<S: serde::Serializer>(
    v: &[Vec<Coefficient>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = v
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    text.serialize(s)
}

pub fn modular_tangent_space(f: &Polynomial) -> Result<ModularTangent> {
    let t1 = tjurina(f)?;
    if t1.tau.is_infinite() {
        return Err(Error::NonIsolated);
    }
    let gens = derivations_unchecked(f)?;
    modular_tangent_from(f, &t1, &gens)
}

/// Common kernel of the action matrices of `gens`, intersected in generator
/// order.
pub fn modular_tangent_from(f: &Polynomial, t1: &GradedT1, gens: &[Derivation]) -> Result<ModularTangent> {
    let twisted: Vec<ActionMatrix> = gens
        .par_iter()
        .map(|v| action_matrix(v, t1, f))
        .collect::<Result<_>>()?;
    let untwisted: Vec<ActionMatrix> = gens
        .par_iter()
        .map(|v| untwisted_action_matrix(v, t1, f))
        .collect::<Result<_>>()?;
    let kernel_basis = common_kernel(&twisted, t1.basis.len());
    Ok(ModularTangent {
        dimension: kernel_basis.len(),
        kernel_basis,
        untwisted_dimension: common_kernel(&untwisted, t1.basis.len()).len(),
        generator_count: gens.len(),
    })
}

fn common_kernel(mats: &[ActionMatrix], tau: usize) -> Vec<Vec<Coefficient>> {
    let rows: Vec<Vec<Coefficient>> = mats.iter().flat_map(|m| m.entries.to_rows()).collect();
    if rows.is_empty() {
        return Matrix::identity(tau).to_rows();
    }
    Matrix::from_rows(rows).nullspace()
}

/// `dim P(m)/J` with `J` spanned by `z_i ∂f/∂z_j`, for homogeneous `f` of
/// degree `m` whose projective hypersurface is smooth.
pub fn projective_t1_dimension(f: &Polynomial) -> Result<usize> {
    let m = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if milnor_number(f)?.is_infinite() {
        return Err(Error::Precondition("projective hypersurface is singular".into()));
    }
    let n = f.nvars();
    let monomials = monomials_of_degree(n, m);
    let index: std::collections::HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut span = EchelonBasis::new();
    for dj in f.gradient().iter() {
        for i in 0..n {
            let q = dj.mul_monomial(&Monomial::var(n, i));
            let mut row = vec![Coefficient::zero(); monomials.len()];
            for (mono, c) in q.terms() {
                row[index[mono]] = c.clone();
            }
            span.insert(row);
        }
    }
    Ok(monomials.len() - span.rank())
}

/// `(m+N)!/(N! m!) − (N+1)²` with `N = n − 1` the projective dimension.
pub fn projective_formula(nvars: usize, degree: u32) -> i64 {
    let big_n = nvars as i64 - 1;
    binomial(degree as i64 + big_n, big_n) - (big_n + 1).pow(2)
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Does the projective `T¹` have the dimension of the weight-`m` piece of
/// the affine `T¹`?
pub fn embedding_check(f: &Polynomial, t1: &GradedT1) -> Result<bool> {
    let m = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if f.nvars() < 4 {
        return Err(Error::Precondition(format!(
            "embedding needs at least 4 variables, got {}",
            f.nvars()
        )));
    }
    if t1.germ() != f {
        return Err(Error::BasisMismatch("T¹ basis was computed for a different germ".into()));
    }
    let projective = projective_t1_dimension(f)?;
    Ok(projective == graded_piece(t1, m as i64)?.len())
}

fn monomials_of_degree(n: usize, m: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, m, &mut Vec::new(), &mut out);
    }
    out
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
    fn quadric_derivations() {
        let f = p("x^2+y^2+z^2");
        let gens = derivation_module(&f).unwrap();
        let rot = Derivation::new(vec![p("y"), p("-x"), p("0")], p("0"), &f).unwrap();
        let euler = Derivation::new(vec![p("x"), p("y"), p("z")], p("2"), &f).unwrap();
        assert!(gens.iter().any(|g| g.proportional_to(&rot)));
        assert!(gens.iter().any(|g| g.proportional_to(&euler)));
        assert!(Derivation::new(vec![p("1"), p("0"), p("0")], p("0"), &f).is_err());
    }

    #[test]
    fn cubic_euler_field() {
        let f = p("x^3+y^3+z^3+x*y*z");
        let gens = derivation_module(&f).unwrap();
        let euler = Derivation::new(vec![p("x"), p("y"), p("z")], p("3"), &f).unwrap();
        assert!(gens.iter().any(|g| g.proportional_to(&euler)));
    }

    #[test]
    fn hyperbolic_generators_vanish_at_origin() {
        let f = p("x^4+y^3+z^3+x*y*z");
        let gens = derivation_module(&f).unwrap();
        assert!(gens.iter().all(Derivation::vanishes_at_origin));
        assert!(derivation_module(&p("x^2*y")).is_err());
    }

    #[test]
    fn euler_and_hamiltonian_actions() {
        let f = p("x^6+y^3+z^2+x*y*z");
        let t1 = tjurina(&f).unwrap();
        let e = euler_field(&f).unwrap();
        let a = action_matrix(&e, &t1, &f).unwrap();
        assert!(a.entries.is_diagonal());
        let w = t1.weights.clone().unwrap();
        for (j, wj) in w.iter().enumerate() {
            assert_eq!(a.entries[(j, j)], integer(wj - 6));
        }
        for h in hamiltonian_fields(&f) {
            assert!(action_matrix(&h, &t1, &f).unwrap().entries.is_zero());
        }
        let zero = Derivation::new(vec![p("0"), p("0"), p("0")], p("0"), &f).unwrap();
        assert!(action_matrix(&zero, &t1, &f).unwrap().entries.is_zero());
        let other = tjurina(&p("x^3+y^3+z^3+x*y*z")).unwrap();
        assert!(matches!(action_matrix(&e, &other, &f), Err(Error::BasisMismatch(_))));
    }

    #[test]
    fn modular_dimensions() {
        let m = modular_tangent_space(&p("x^3+y^3+z^3+x*y*z")).unwrap();
        assert_eq!(m.dimension, 1);
        // the class [xyz] spans the kernel
        let t1 = tjurina(&p("x^3+y^3+z^3+x*y*z")).unwrap();
        let xyz = t1.coordinates(&p("x*y*z")).unwrap();
        let both = Matrix::from_rows(vec![xyz.clone(), m.kernel_basis[0].clone()]);
        assert!(xyz.iter().any(|c| !c.is_zero()));
        assert_eq!(both.rank(), 1);
        assert_eq!(modular_tangent_space(&p("x^5+y^2+z^2")).unwrap().dimension, 0);
        assert!(modular_tangent_space(&p("x^4+y^3+z^3+x*y*z")).unwrap().dimension >= 1);
        assert_eq!(
            modular_tangent_space(&p("x^3+y^3+z^3-3*x*y*z")).unwrap_err(),
            Error::NonIsolated
        );
    }

    #[test]
    fn projective_dimensions() {
        let v4 = ["x", "y", "z", "w"];
        let quartic = parse_poly("x^4+y^4+z^4+w^4", &v4).unwrap();
        assert_eq!(projective_t1_dimension(&quartic).unwrap(), 19);
        assert_eq!(projective_formula(4, 4), 19);
        let cubic = parse_poly("x^3+y^3+z^3+w^3", &v4).unwrap();
        assert_eq!(projective_t1_dimension(&cubic).unwrap(), 4);
        assert_eq!(projective_formula(4, 3), 4);
        let quadric = parse_poly("x^2+y^2+z^2+w^2", &v4).unwrap();
        assert_eq!(projective_t1_dimension(&quadric).unwrap(), 0);
        assert_eq!(projective_formula(4, 2), -6);
        assert_eq!(
            projective_t1_dimension(&parse_poly("x^3+y", &["x", "y"]).unwrap()).unwrap_err(),
            Error::NotHomogeneous
        );
        let singular = parse_poly("x^2*y+z^3+w^3", &v4).unwrap();
        assert!(matches!(projective_t1_dimension(&singular), Err(Error::Precondition(_))));
    }

    #[test]
    fn embedding() {
        let v4 = ["x", "y", "z", "w"];
        let quartic = parse_poly("x^4+y^4+z^4+w^4", &v4).unwrap();
        let t1 = tjurina(&quartic).unwrap();
        assert!(embedding_check(&quartic, &t1).unwrap());
        let v5 = ["a", "b", "c", "d", "e"];
        let cubic5 = parse_poly("a^3+b^3+c^3+d^3+e^3", &v5).unwrap();
        let t1 = tjurina(&cubic5).unwrap();
        assert_eq!(projective_t1_dimension(&cubic5).unwrap(), 10);
        assert!(embedding_check(&cubic5, &t1).unwrap());
        let bad = parse_poly("x^4+y^4+z^4+w^3", &v4).unwrap();
        let t1 = tjurina(&bad).unwrap();
        assert_eq!(embedding_check(&bad, &t1).unwrap_err(), Error::NotHomogeneous);
        let small = p("x^3+y^3+z^3");
        let t1 = tjurina(&small).unwrap();
        assert!(matches!(embedding_check(&small, &t1), Err(Error::Precondition(_))));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(4, 4).len(), 35);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }
}
