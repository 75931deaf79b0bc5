//! Schubert, opposite-Schubert and Richardson membership on the symplectic
//! flag variety, plus the unit-coordinate generators of Richardson ideals.
//!
//! Membership is decided against the nested ladder built on the chain order
//! `1 < 2 < ... < n < 2n < ... < n+1`: writing `F_m` for the span of the
//! first `m` chain labels, `G_m` for the span of the chain labels at
//! positions `>= m`, and `pos(i)` for the chain position of label `i`, a
//! point `U` lies in
//!
//! * the Schubert variety of `w` iff `dim(U cap F_pos(w_t)) >= t` for all t,
//! * the opposite Schubert variety of `w` iff
//!   `dim(U cap G_pos(w_t)) >= d + 1 - t` for all t (the mirrored condition
//!   along the reversed chain, which stratifies the opposite-Borel orbits),
//! * the cell of `w` iff `dim(U cap F_pos(w_t)) = t` and the dimension one
//!   step down the chain is strictly smaller,
//! * the Richardson locus of `(u, v)` iff it is in the Schubert variety of
//!   `u` and the opposite Schubert variety of `v`.

use crate::indices::{
    enumerate_spbar, rank_sp, sigma, sp_bruhat_ge, IndexError, SpIndex,
};
use crate::matrix::{intersect_columns, Mat, MatError, SubspacePoint};
use crate::pluecker::{sp_relations, LinearForm, PlueckerError};
use crate::scalar::Field;
use crate::symplectic::SymplecticContext;
use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchubertError {
    #[error("ambient mismatch: point lives in dimension {got}, context in {expected}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("coset {coset:?} does not have length {d}")]
    CosetLength { coset: Vec<usize>, d: usize },
    #[error("labels {0:?} are not distinct labels in range")]
    BadLabels(Vec<usize>),
    #[error("empty Richardson datum: {u:?} is not above {v:?} in the type C order")]
    NotComparable { u: Vec<usize>, v: Vec<usize> },
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Pluecker(#[from] PlueckerError),
}

/// The ladder `F_0 c F_1 c ... c F_2n` spanned by prefixes of the chain
/// `e_1, ..., e_n, e_2n, e_(2n-1), ..., e_(n+1)`, together with the suffix
/// spans used by the sampler.
#[derive(Clone, Debug)]
pub struct Filtration {
    n: usize,
    field: Field,
    prefixes: Vec<Mat>,
    suffixes: Vec<Mat>,
}

impl Filtration {
    pub fn new(n: usize, field: Field) -> Filtration {
        let dim = 2 * n;
        let labels: Vec<usize> = (1..=dim)
            .map(|pos| if pos <= n { pos } else { 3 * n + 1 - pos })
            .collect();
        let coord = |chosen: &[usize]| {
            Mat::from_fn(dim, chosen.len(), field, |r, c| {
                if r + 1 == chosen[c] {
                    field.one()
                } else {
                    field.zero()
                }
            })
        };
        let prefixes = (0..=dim).map(|m| coord(&labels[..m])).collect();
        let suffixes = (0..=dim).map(|m| coord(&labels[m..])).collect();
        Filtration {
            n,
            field,
            prefixes,
            suffixes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `F_m`, the span of the first `m` chain labels (`F_0 = 0`).
    pub fn subspace(&self, m: usize) -> &Mat {
        &self.prefixes[m]
    }

    /// Span of the chain labels at positions `> m` (the whole space at 0).
    pub fn opposite_subspace(&self, m: usize) -> &Mat {
        &self.suffixes[m]
    }

    /// Label occupying chain position `pos` (1-based).
    pub fn chain_label(&self, pos: usize) -> usize {
        if pos <= self.n {
            pos
        } else {
            3 * self.n + 1 - pos
        }
    }
}

fn check_point(u: &SubspacePoint, f: &Filtration) -> Result<(), SchubertError> {
    if u.ambient() != 2 * f.n() {
        return Err(SchubertError::AmbientMismatch {
            expected: 2 * f.n(),
            got: u.ambient(),
        });
    }
    if u.matrix().field() != f.field() {
        return Err(SchubertError::Mat(MatError::FieldMismatch));
    }
    Ok(())
}

/// The coordinate subspace spanned by `e_label` for the given labels; the
/// fixed point of the torus action attached to a coset.
pub fn e_point(labels: &[usize], ctx: &SymplecticContext) -> Result<SubspacePoint, SchubertError> {
    let dim = ctx.dim();
    let mut seen = labels.to_vec();
    seen.sort_unstable();
    if labels.is_empty()
        || seen.windows(2).any(|w| w[0] == w[1])
        || seen.iter().any(|&l| l == 0 || l > dim)
    {
        return Err(SchubertError::BadLabels(labels.to_vec()));
    }
    let f = ctx.field();
    let m = Mat::from_fn(dim, labels.len(), f, |r, c| {
        if r + 1 == labels[c] {
            f.one()
        } else {
            f.zero()
        }
    });
    Ok(SubspacePoint::new(m)?)
}

/// `dim(U cap F_pos(w_t)) >= t` for every t.
pub fn schubert_member(
    u: &SubspacePoint,
    w: &SpIndex,
    f: &Filtration,
) -> Result<bool, SchubertError> {
    check_point(u, f)?;
    for (t, &label) in w.entries().iter().enumerate() {
        let m = rank_sp(label, f.n())?;
        if u.intersection_dim(f.subspace(m))? < t + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim(U cap G_pos(w_t)) >= d + 1 - t` for every t, where `G_m` spans the
/// chain labels at positions `>= m`. Equivalently, the jump positions of `U`
/// along the ladder all sit at or above the chain positions of `w`.
pub fn opp_schubert_member(
    u: &SubspacePoint,
    w: &SpIndex,
    f: &Filtration,
) -> Result<bool, SchubertError> {
    check_point(u, f)?;
    let d = w.len();
    for (t, &label) in w.entries().iter().enumerate() {
        let pos = rank_sp(label, f.n())?;
        if u.intersection_dim(f.opposite_subspace(pos - 1))? < d - t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The open cell: equality `dim(U cap F_pos(w_t)) = t` together with strict
/// drop one step down the chain.
pub fn cell_member(u: &SubspacePoint, w: &SpIndex, f: &Filtration) -> Result<bool, SchubertError> {
    check_point(u, f)?;
    for (t, &label) in w.entries().iter().enumerate() {
        let at = u.intersection_dim(f.subspace(rank_sp(label, f.n())?))?;
        let below = sigma(label, f.n())?;
        let m = if below == 0 { 0 } else { rank_sp(below, f.n())? };
        let under = u.intersection_dim(f.subspace(m))?;
        if !(at == t + 1 && under < t + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Richardson datum on `Sp_2n/P_d`: the Schubert coset `u` and opposite
/// coset `v`. The locus is nonempty exactly when `u >= v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RichardsonSpec {
    n: usize,
    d: usize,
    u: SpIndex,
    v: SpIndex,
}

impl RichardsonSpec {
    pub fn new(n: usize, d: usize, u: SpIndex, v: SpIndex) -> Result<RichardsonSpec, SchubertError> {
        for w in [&u, &v] {
            if w.len() != d {
                return Err(SchubertError::CosetLength {
                    coset: w.entries().to_vec(),
                    d,
                });
            }
            // revalidate the shape against this n
            SpIndex::new(w.entries().to_vec(), n)?;
        }
        Ok(RichardsonSpec { n, d, u, v })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn u(&self) -> &SpIndex {
        &self.u
    }

    pub fn v(&self) -> &SpIndex {
        &self.v
    }

    /// Whether `u >= v`, the order-level nonemptiness test.
    pub fn is_order_nonempty(&self) -> Result<bool, SchubertError> {
        Ok(sp_bruhat_ge(&self.u.as_bar(), &self.v.as_bar(), self.n)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "u": self.u.entries(),
            "v": self.v.entries(),
        })
    }
}

/// Intersection membership: in the Schubert variety of `u` and the opposite
/// Schubert variety of `v`.
pub fn richardson_member(
    u: &SubspacePoint,
    spec: &RichardsonSpec,
    f: &Filtration,
) -> Result<bool, SchubertError> {
    Ok(schubert_member(u, spec.u(), f)? && opp_schubert_member(u, spec.v(), f)?)
}

/// Which generating set to emit: the unit coordinates alone (generators of
/// the Richardson ideal inside the flag variety's coordinate ring), or those
/// together with the isotropy relations (cutting the same locus out of the
/// full Grassmannian).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorLevel {
    Quotient,
    Ambient,
}

/// Ideal generators of the Richardson locus of `(u, v)`: one unit form
/// `p_beta` for every shape-sorted `beta` outside the order interval
/// `[v, u]`, plus the isotropy relations at ambient level. Requires `u >= v`.
pub fn richardson_generators(
    spec: &RichardsonSpec,
    level: GeneratorLevel,
) -> Result<Vec<LinearForm>, SchubertError> {
    if !spec.is_order_nonempty()? {
        return Err(SchubertError::NotComparable {
            u: spec.u().entries().to_vec(),
            v: spec.v().entries().to_vec(),
        });
    }
    let n = spec.n();
    let ubar = spec.u().as_bar();
    let vbar = spec.v().as_bar();
    let mut out = Vec::new();
    for beta in enumerate_spbar(spec.d(), n)? {
        let inside = sp_bruhat_ge(&ubar, &beta, n)? && sp_bruhat_ge(&beta, &vbar, n)?;
        if !inside {
            out.push(LinearForm::unit(2 * n, beta.sorted()));
        }
    }
    if level == GeneratorLevel::Ambient {
        out.extend(sp_relations(n, spec.d())?.forms);
    }
    Ok(out)
}

/// Best-effort random point of the Richardson locus: the t-th basis vector
/// is drawn from `F_pos(u_t)`, the opposite span down to `pos(v_t)`, and the
/// form-orthogonal complement of the vectors picked so far. The result is
/// certified by [`richardson_member`]; `None` means this draw failed and the
/// caller may retry with fresh randomness.
pub fn richardson_sample<R: Rng>(
    spec: &RichardsonSpec,
    ctx: &SymplecticContext,
    rng: &mut R,
) -> Result<Option<SubspacePoint>, SchubertError> {
    if !spec.is_order_nonempty()? {
        return Err(SchubertError::NotComparable {
            u: spec.u().entries().to_vec(),
            v: spec.v().entries().to_vec(),
        });
    }
    let n = spec.n();
    let dim = ctx.dim();
    let field = ctx.field();
    let fil = Filtration::new(n, field);
    let j = ctx.j_matrix();
    let mut picked: Vec<Mat> = Vec::with_capacity(spec.d());
    for t in 0..spec.d() {
        let upper = fil.subspace(rank_sp(spec.u().entries()[t], n)?);
        let lower = fil.opposite_subspace(rank_sp(spec.v().entries()[t], n)? - 1);
        let mut space = intersect_columns(upper, lower);
        if !picked.is_empty() {
            // rows f_s^T J constrain to the form-orthogonal complement
            let mut constraints = Mat::zeros(picked.len(), dim, field);
            for (s, fs) in picked.iter().enumerate() {
                let row = fs.transpose().mul(&j);
                for c in 0..dim {
                    constraints.set(s, c, row.at(0, c).clone());
                }
            }
            space = intersect_columns(&space, &constraints.kernel());
        }
        if space.cols() == 0 {
            return Ok(None);
        }
        let mut vector = Mat::zeros(dim, 1, field);
        let mut tries = 0;
        while vector.is_zero() {
            if tries == 16 {
                return Ok(None);
            }
            tries += 1;
            let coeffs = Mat::random(space.cols(), 1, field, ctx.pool(), rng);
            vector = space.mul(&coeffs);
        }
        picked.push(vector);
    }
    let mut basis = picked[0].clone();
    for f in &picked[1..] {
        basis = basis.hstack(f);
    }
    if basis.rank() != spec.d() {
        return Ok(None);
    }
    let point = SubspacePoint::new(basis)?;
    if richardson_member(&point, spec, &fil)? {
        Ok(Some(point))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::enumerate_sp;
    use crate::symplectic::is_isotropic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx_q(n: usize) -> SymplecticContext {
        SymplecticContext::new(n, Field::Rational)
    }

    #[test]
    fn ladder_dimensions_and_labels() {
        let f = Filtration::new(3, Field::Rational);
        for m in 0..=6 {
            assert_eq!(f.subspace(m).cols(), m);
            assert_eq!(f.subspace(m).rank(), m);
        }
        let labels: Vec<usize> = (1..=6).map(|p| f.chain_label(p)).collect();
        assert_eq!(labels, vec![1, 2, 3, 6, 5, 4]);
    }

    #[test]
    fn e_points_are_isotropic_for_cosets() {
        let ctx = ctx_q(2);
        for w in enumerate_sp(2, 2).unwrap() {
            let p = e_point(w.entries(), &ctx).unwrap();
            assert!(is_isotropic(&p, &ctx).unwrap(), "{w:?}");
        }
        assert!(e_point(&[1, 1], &ctx).is_err());
        assert!(e_point(&[0, 2], &ctx).is_err());
    }

    #[test]
    fn fixed_point_membership_matches_order() {
        let n = 2;
        let ctx = ctx_q(n);
        let fil = Filtration::new(n, Field::Rational);
        let cosets = enumerate_sp(2, n).unwrap();
        for w in &cosets {
            for wp in &cosets {
                let p = e_point(wp.entries(), &ctx).unwrap();
                let le = sp_bruhat_ge(&w.as_bar(), &wp.as_bar(), n).unwrap();
                let ge = sp_bruhat_ge(&wp.as_bar(), &w.as_bar(), n).unwrap();
                assert_eq!(schubert_member(&p, w, &fil).unwrap(), le, "{wp:?} in X_{w:?}");
                assert_eq!(
                    opp_schubert_member(&p, w, &fil).unwrap(),
                    ge,
                    "{wp:?} in opposite of {w:?}"
                );
                assert_eq!(cell_member(&p, w, &fil).unwrap(), w == wp);
            }
        }
    }

    #[test]
    fn extreme_varieties() {
        let n = 2;
        let ctx = ctx_q(n);
        let fil = Filtration::new(n, Field::Rational);
        let top = SpIndex::new(vec![4, 3], n).unwrap();
        let bottom = SpIndex::new(vec![1, 2], n).unwrap();
        for w in enumerate_sp(2, n).unwrap() {
            let p = e_point(w.entries(), &ctx).unwrap();
            assert!(schubert_member(&p, &top, &fil).unwrap());
            assert!(opp_schubert_member(&p, &bottom, &fil).unwrap());
        }
    }

    #[test]
    fn opposite_variety_of_the_top_coset_is_a_single_point() {
        use crate::oracle::{gp_points, DEFAULT_BUDGET};
        let n = 2;
        let fil = Filtration::new(n, Field::fp(2));
        let top = SpIndex::new(vec![4, 3], n).unwrap();
        let members: Vec<_> = gp_points(2, n, 2, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .filter(|p| opp_schubert_member(p, &top, &fil).unwrap())
            .collect();
        assert_eq!(members.len(), 1);
        let ctx = SymplecticContext::new(n, Field::fp(2));
        let e_top = e_point(&[4, 3], &ctx).unwrap();
        assert_eq!(members[0].canonical(), e_top.canonical());
    }

    #[test]
    fn richardson_fixed_points() {
        let n = 2;
        let ctx = ctx_q(n);
        let fil = Filtration::new(n, Field::Rational);
        let u = SpIndex::new(vec![2, 3], n).unwrap();
        let v = SpIndex::new(vec![1, 4], n).unwrap();
        let spec = RichardsonSpec::new(n, 2, u, v).unwrap();
        assert!(spec.is_order_nonempty().unwrap());
        for w in enumerate_sp(2, n).unwrap() {
            let p = e_point(w.entries(), &ctx).unwrap();
            let inside = sp_bruhat_ge(&spec.u().as_bar(), &w.as_bar(), n).unwrap()
                && sp_bruhat_ge(&w.as_bar(), &spec.v().as_bar(), n).unwrap();
            assert_eq!(richardson_member(&p, &spec, &fil).unwrap(), inside);
        }
    }

    #[test]
    fn generator_counts_on_the_chain() {
        let n = 2;
        let mk = |u: Vec<usize>, v: Vec<usize>| {
            RichardsonSpec::new(
                n,
                2,
                SpIndex::new(u, n).unwrap(),
                SpIndex::new(v, n).unwrap(),
            )
            .unwrap()
        };
        // full interval: no unit generators
        let full = mk(vec![4, 3], vec![1, 2]);
        assert!(richardson_generators(&full, GeneratorLevel::Quotient)
            .unwrap()
            .is_empty());
        // single point: everything except p_(1,2)
        let point = mk(vec![1, 2], vec![1, 2]);
        let gens = richardson_generators(&point, GeneratorLevel::Quotient).unwrap();
        assert_eq!(gens.len(), 5);
        assert!(gens.iter().all(|g| g.terms().len() == 1));
        // interval of (2,3) over (1,4) is the diamond
        // {(1,4), (1,3), (2,4), (2,3)}; only the extremes die
        let mid = mk(vec![2, 3], vec![1, 4]);
        let gens = richardson_generators(&mid, GeneratorLevel::Quotient).unwrap();
        let texts: Vec<String> = gens.iter().map(|g| g.text()).collect();
        assert_eq!(texts, vec!["+p[1,2]", "+p[3,4]"]);
        // ambient level appends the isotropy relation
        let amb = richardson_generators(&mid, GeneratorLevel::Ambient).unwrap();
        assert_eq!(amb.len(), 3);
        assert_eq!(amb[2].text(), "+p[1,3] +p[2,4]");
    }

    #[test]
    fn generators_reject_incomparable_pairs() {
        let n = 2;
        let spec = RichardsonSpec::new(
            n,
            2,
            SpIndex::new(vec![1, 4], n).unwrap(),
            SpIndex::new(vec![2, 3], n).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            richardson_generators(&spec, GeneratorLevel::Quotient),
            Err(SchubertError::NotComparable { .. })
        ));
    }

    #[test]
    fn sampler_returns_the_unique_point_when_u_equals_v() {
        let n = 2;
        let ctx = ctx_q(n);
        let w = SpIndex::new(vec![2, 3], n).unwrap();
        let spec = RichardsonSpec::new(n, 2, w.clone(), w.clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let point = richardson_sample(&spec, &ctx, &mut rng)
            .unwrap()
            .expect("the singleton locus is always hit");
        let expected = e_point(w.entries(), &ctx).unwrap();
        assert_eq!(point.canonical(), expected.canonical());
    }

    #[test]
    fn sampler_certifies_its_output() {
        let n = 3;
        let ctx = SymplecticContext::new(n, Field::fp(1009));
        let fil = Filtration::new(n, Field::fp(1009));
        let spec = RichardsonSpec::new(
            n,
            2,
            SpIndex::new(vec![5, 4], n).unwrap(),
            SpIndex::new(vec![1, 2], n).unwrap(),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut successes = 0;
        for _ in 0..30 {
            if let Some(p) = richardson_sample(&spec, &ctx, &mut rng).unwrap() {
                successes += 1;
                assert!(richardson_member(&p, &spec, &fil).unwrap());
                assert!(is_isotropic(&p, &ctx).unwrap());
            }
        }
        assert!(successes > 0);
    }

    #[test]
    fn sampler_rejects_incomparable_pairs() {
        let n = 2;
        let ctx = ctx_q(n);
        let spec = RichardsonSpec::new(
            n,
            2,
            SpIndex::new(vec![1, 4], n).unwrap(),
            SpIndex::new(vec![2, 3], n).unwrap(),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            richardson_sample(&spec, &ctx, &mut rng),
            Err(SchubertError::NotComparable { .. })
        ));
    }
}
