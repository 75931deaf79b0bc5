//! The standard symplectic form, group-membership and isotropy tests, the
//! maximal parabolic `P_d`, and seeded samplers for Borel and opposite-Borel
//! elements.
//!
//! The form is `J = [[0, -I], [I, 0]]` in n x n blocks; a matrix `M` of
//! order 2n belongs to the group when `M^T J M = J`, equivalently when its
//! blocks `[[A, B], [C, D]]` satisfy `A^T C - C^T A = 0`, `B^T D - D^T B = 0`
//! and `A^T D - C^T B = I`.

use crate::indices::{full_weyl_tuple, SpIndex};
use crate::matrix::{Mat, MatError, SubspacePoint};
use crate::scalar::{Field, Scalar};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("matrix of order {got} where {expected} was required")]
    WrongOrder { expected: usize, got: usize },
    #[error("field mismatch with context")]
    FieldMismatch,
    #[error("matrix does not satisfy M^T J M = J")]
    NotSymplectic,
    #[error("parabolic index {d} outside 1..={n}")]
    BadParabolicIndex { d: usize, n: usize },
    #[error("signed Weyl representative for {coset:?} fails the form check")]
    WeylSignFailure { coset: Vec<usize> },
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Index(#[from] crate::indices::IndexError),
}

/// Ambient data of one computation: the half-rank `n`, the coefficient
/// field, and the integer pool samplers draw from over the rationals.
#[derive(Clone, Debug)]
pub struct SymplecticContext {
    n: usize,
    field: Field,
    pool: (i64, i64),
}

impl SymplecticContext {
    pub fn new(n: usize, field: Field) -> SymplecticContext {
        assert!(n >= 1, "half-rank must be positive");
        SymplecticContext {
            n,
            field,
            pool: (-3, 3),
        }
    }

    pub fn with_pool(mut self, lo: i64, hi: i64) -> SymplecticContext {
        assert!(lo < hi);
        self.pool = (lo, hi);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn pool(&self) -> (i64, i64) {
        self.pool
    }

    /// The standard form matrix `[[0, -I], [I, 0]]`.
    pub fn j_matrix(&self) -> Mat {
        let n = self.n;
        let f = self.field;
        Mat::from_fn(2 * n, 2 * n, f, |r, c| {
            if r < n && c == r + n {
                -f.one()
            } else if r >= n && c == r - n {
                f.one()
            } else {
                f.zero()
            }
        })
    }
}

/// A validated element of the symplectic group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    m: Mat,
}

impl GroupElement {
    pub fn new(m: Mat, ctx: &SymplecticContext) -> Result<GroupElement, SymplecticError> {
        if is_symplectic(&m, ctx)? {
            Ok(GroupElement { m })
        } else {
            Err(SymplecticError::NotSymplectic)
        }
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.m.to_json()
    }
}

fn check_order(m: &Mat, ctx: &SymplecticContext) -> Result<(), SymplecticError> {
    if m.rows() != ctx.dim() || m.cols() != ctx.dim() {
        return Err(SymplecticError::WrongOrder {
            expected: ctx.dim(),
            got: m.rows().max(m.cols()),
        });
    }
    if m.field() != ctx.field() {
        return Err(SymplecticError::FieldMismatch);
    }
    Ok(())
}

fn blocks(m: &Mat, n: usize) -> (Mat, Mat, Mat, Mat) {
    let lo: Vec<usize> = (0..n).collect();
    let hi: Vec<usize> = (n..2 * n).collect();
    (
        m.submatrix(&lo, &lo),
        m.submatrix(&lo, &hi),
        m.submatrix(&hi, &lo),
        m.submatrix(&hi, &hi),
    )
}

/// Group membership via the defining identity `M^T J M = J`; the equivalent
/// block criterion is evaluated alongside and the two must agree.
pub fn is_symplectic(m: &Mat, ctx: &SymplecticContext) -> Result<bool, SymplecticError> {
    check_order(m, ctx)?;
    let j = ctx.j_matrix();
    let direct = m.transpose().mul(&j).mul(m) == j;
    let blockwise = satisfies_block_criterion(m, ctx)?;
    assert_eq!(direct, blockwise, "form identity and block criterion disagree");
    Ok(direct)
}

/// The three block equations on `[[A, B], [C, D]]`.
pub fn satisfies_block_criterion(m: &Mat, ctx: &SymplecticContext) -> Result<bool, SymplecticError> {
    check_order(m, ctx)?;
    let (a, b, c, d) = blocks(m, ctx.n());
    let at = a.transpose();
    let bt = b.transpose();
    let ct = c.transpose();
    let dt = d.transpose();
    let eq1 = at.mul(&c).sub(&ct.mul(&a)).is_zero();
    let eq2 = bt.mul(&d).sub(&dt.mul(&b)).is_zero();
    let eq3 = at.mul(&d).sub(&ct.mul(&b)) == Mat::identity(ctx.n(), ctx.field());
    Ok(eq1 && eq2 && eq3)
}

/// True when every pair of basis columns of `u` pairs to zero under the
/// form, i.e. `U^T J U = 0`.
pub fn is_isotropic(u: &SubspacePoint, ctx: &SymplecticContext) -> Result<bool, SymplecticError> {
    if u.ambient() != ctx.dim() {
        return Err(SymplecticError::WrongOrder {
            expected: ctx.dim(),
            got: u.ambient(),
        });
    }
    if u.matrix().field() != ctx.field() {
        return Err(SymplecticError::FieldMismatch);
    }
    let m = u.matrix();
    Ok(m.transpose().mul(&ctx.j_matrix()).mul(m).is_zero())
}

/// Membership in the maximal parabolic `P_d`: block `A` is
/// `[[X_dxd, *], [0, X]]` with invertible diagonal blocks and block `C`
/// vanishes outside its lower-right `(n-d) x (n-d)` corner.
pub fn in_parabolic(
    g: &GroupElement,
    d: usize,
    ctx: &SymplecticContext,
) -> Result<bool, SymplecticError> {
    let n = ctx.n();
    if d == 0 || d > n {
        return Err(SymplecticError::BadParabolicIndex { d, n });
    }
    let (a, _, c, _) = blocks(g.matrix(), n);
    for r in d..n {
        for col in 0..d {
            if !a.at(r, col).is_zero() {
                return Ok(false);
            }
        }
    }
    for r in 0..n {
        for col in 0..n {
            if (r < d || col < d) && !c.at(r, col).is_zero() {
                return Ok(false);
            }
        }
    }
    let head: Vec<usize> = (0..d).collect();
    let tail: Vec<usize> = (d..n).collect();
    let head_ok = a.submatrix(&head, &head).rank() == d;
    let tail_ok = a.submatrix(&tail, &tail).rank() == n - d;
    Ok(head_ok && tail_ok)
}

/// Random element of the standard Borel subgroup: `[[A, A S], [0, (A^T)^-1]]`
/// for a random invertible upper-triangular `A` and random symmetric `S`.
pub fn borel_sample<R: Rng>(ctx: &SymplecticContext, rng: &mut R) -> GroupElement {
    let a = random_triangular(ctx, rng, true);
    let s = random_symmetric(ctx, rng);
    let a_inv_t = a.inverse().expect("triangular with nonzero diagonal").transpose();
    let n = ctx.n();
    let b = a.mul(&s);
    let m = assemble_blocks(&a, &b, &Mat::zeros(n, n, ctx.field()), &a_inv_t);
    GroupElement::new(m, ctx).expect("parametrization satisfies the form")
}

/// Random element of the opposite Borel subgroup:
/// `[[A, 0], [(A^T)^-1 S, (A^T)^-1]]` with `A` lower triangular, `S` symmetric.
pub fn opp_borel_sample<R: Rng>(ctx: &SymplecticContext, rng: &mut R) -> GroupElement {
    let a = random_triangular(ctx, rng, false);
    let s = random_symmetric(ctx, rng);
    let a_inv_t = a.inverse().expect("triangular with nonzero diagonal").transpose();
    let n = ctx.n();
    let c = a_inv_t.mul(&s);
    let m = assemble_blocks(&a, &Mat::zeros(n, n, ctx.field()), &c, &a_inv_t);
    GroupElement::new(m, ctx).expect("parametrization satisfies the form")
}

fn assemble_blocks(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
    let n = a.rows();
    Mat::from_fn(2 * n, 2 * n, a.field(), |r, col| {
        match (r < n, col < n) {
            (true, true) => a.at(r, col).clone(),
            (true, false) => b.at(r, col - n).clone(),
            (false, true) => c.at(r - n, col).clone(),
            (false, false) => d.at(r - n, col - n).clone(),
        }
    })
}

fn random_triangular<R: Rng>(ctx: &SymplecticContext, rng: &mut R, upper: bool) -> Mat {
    let n = ctx.n();
    let f = ctx.field();
    Mat::from_fn(n, n, f, |r, c| {
        if r == c {
            f.random_nonzero(ctx.pool(), rng)
        } else if (upper && r < c) || (!upper && r > c) {
            f.random_element(ctx.pool(), rng)
        } else {
            f.zero()
        }
    })
}

fn random_symmetric<R: Rng>(ctx: &SymplecticContext, rng: &mut R) -> Mat {
    let n = ctx.n();
    let f = ctx.field();
    let mut s = Mat::zeros(n, n, f);
    for r in 0..n {
        for c in r..n {
            let v = f.random_element(ctx.pool(), rng);
            s.set(r, c, v.clone());
            s.set(c, r, v);
        }
    }
    s
}

/// Signed permutation matrix representing a Weyl coset: column `t` is
/// `e_{i_t}` for the expanded 2n-tuple, negated at positions `t <= n` whose
/// label exceeds `n`. The sign choice always restores `M^T J M = J` for the
/// partner-paired expansion; a failure is reported, never ignored.
pub fn weyl_matrix(w: &SpIndex, ctx: &SymplecticContext) -> Result<GroupElement, SymplecticError> {
    let n = ctx.n();
    let full = full_weyl_tuple(w, n)?;
    let f = ctx.field();
    let m = Mat::from_fn(2 * n, 2 * n, f, |r, c| {
        let label = full[c];
        if r + 1 == label {
            if c < n && label > n {
                -f.one()
            } else {
                f.one()
            }
        } else {
            f.zero()
        }
    });
    if !is_symplectic(&m, ctx)? {
        return Err(SymplecticError::WeylSignFailure {
            coset: w.entries().to_vec(),
        });
    }
    Ok(GroupElement { m })
}

/// Scalar valued pairing `x^T J y` of two column vectors given as n x 1 mats.
pub fn form_pairing(x: &Mat, y: &Mat, ctx: &SymplecticContext) -> Scalar {
    x.transpose().mul(&ctx.j_matrix()).mul(y).at(0, 0).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::enumerate_sp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx_q(n: usize) -> SymplecticContext {
        SymplecticContext::new(n, Field::Rational)
    }

    #[test]
    fn j_squares_to_minus_identity() {
        for n in 1..=4 {
            let ctx = ctx_q(n);
            let j = ctx.j_matrix();
            assert_eq!(j.mul(&j), Mat::identity(2 * n, Field::Rational).neg());
            assert!(is_symplectic(&j, &ctx).unwrap());
        }
    }

    #[test]
    fn identity_is_symplectic() {
        let ctx = ctx_q(3);
        assert!(is_symplectic(&Mat::identity(6, Field::Rational), &ctx).unwrap());
    }

    #[test]
    fn diagonal_membership() {
        let ctx = ctx_q(2);
        let good = Mat::from_fn(4, 4, Field::Rational, |r, c| {
            if r != c {
                return Field::Rational.zero();
            }
            match r {
                0 => Field::Rational.from_i64(2),
                2 => &Field::Rational.one() / &Field::Rational.from_i64(2),
                _ => Field::Rational.one(),
            }
        });
        assert!(is_symplectic(&good, &ctx).unwrap());
        let bad = Mat::from_fn(4, 4, Field::Rational, |r, c| {
            if r == c {
                if r == 0 || r == 2 {
                    Field::Rational.from_i64(2)
                } else {
                    Field::Rational.one()
                }
            } else {
                Field::Rational.zero()
            }
        });
        assert!(!is_symplectic(&bad, &ctx).unwrap());
    }

    #[test]
    fn wrong_order_rejected() {
        let ctx = ctx_q(2);
        assert!(matches!(
            is_symplectic(&Mat::identity(3, Field::Rational), &ctx),
            Err(SymplecticError::WrongOrder { .. })
        ));
    }

    #[test]
    fn coordinate_isotropy() {
        let ctx = ctx_q(2);
        let e12 = SubspacePoint::new(Mat::from_i64_rows(
            Field::Rational,
            &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]],
        ))
        .unwrap();
        assert!(is_isotropic(&e12, &ctx).unwrap());
        let e13 = SubspacePoint::new(Mat::from_i64_rows(
            Field::Rational,
            &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]],
        ))
        .unwrap();
        assert!(!is_isotropic(&e13, &ctx).unwrap());
    }

    #[test]
    fn samplers_land_in_group_and_parabolics() {
        for &field in &[Field::Rational, Field::fp(1009)] {
            for n in 1..=4 {
                let ctx = SymplecticContext::new(n, field);
                let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
                for _ in 0..25 {
                    let b = borel_sample(&ctx, &mut rng);
                    let ob = opp_borel_sample(&ctx, &mut rng);
                    for d in 1..=n {
                        assert!(in_parabolic(&b, d, &ctx).unwrap());
                    }
                    assert!(is_symplectic(ob.matrix(), &ctx).unwrap());
                }
            }
        }
    }

    #[test]
    fn borel_fixes_the_coordinate_flag() {
        let ctx = ctx_q(3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let b = borel_sample(&ctx, &mut rng);
            for d in 1..=3 {
                // the image of span{e_1..e_d} keeps a nonzero top d x d minor
                let cols: Vec<usize> = (0..d).collect();
                let rows: Vec<usize> = (0..6).collect();
                let img = b.matrix().submatrix(&rows, &cols);
                let top: Vec<usize> = (1..=d).collect();
                assert!(!img.minor(&top, &top).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn weyl_matrices_are_symplectic() {
        for n in 1..=4 {
            let ctx = SymplecticContext::new(n, Field::Rational);
            for d in 1..=n {
                for w in enumerate_sp(d, n).unwrap() {
                    let g = weyl_matrix(&w, &ctx).expect("sign rule restores the form");
                    assert!(is_symplectic(g.matrix(), &ctx).unwrap());
                }
            }
        }
    }

    #[test]
    fn weyl_matrix_of_identity_coset() {
        let ctx = ctx_q(2);
        let w = SpIndex::new(vec![1, 2], 2).unwrap();
        assert_eq!(
            weyl_matrix(&w, &ctx).unwrap().matrix(),
            &Mat::identity(4, Field::Rational)
        );
    }

    #[test]
    fn non_parabolic_weyl_element() {
        let ctx = ctx_q(2);
        let w = SpIndex::new(vec![1, 4], 2).unwrap();
        let g = weyl_matrix(&w, &ctx).unwrap();
        assert!(!in_parabolic(&g, 2, &ctx).unwrap());
    }
}
