//! Plücker coordinates of subspace points, integer linear forms in the
//! coordinates, and the linear relations cutting the isotropic locus out of
//! the Grassmannian `G_{d,2n}`.
//!
//! Coordinates are indexed by strictly increasing tuples; the value at an
//! arbitrarily ordered tuple is the value at its sort (zero on repeats),
//! with all signs carried externally by the inversion count [`tau`]. This
//! symmetric convention is what makes the relation display below literal:
//! for each `(d-2)`-tuple `i` the form
//!
//! ```text
//!   sum_t (-1)^tau(i, t, n+t) * p_(i, t, n+t)        (t = 1..n)
//! ```
//!
//! vanishes exactly on the isotropic d-subspaces, together with all such
//! forms (single form `sum_t p_(t, n+t)` when d = 2, nothing when d = 1).

use crate::indices::{
    enumerate_index_tuples, normalize_tuple, tau, IndexError, IndexTuple, NormalizedTuple,
};
use crate::matrix::{MatError, SubspacePoint};
use crate::scalar::{Field, Scalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlueckerError {
    #[error("tuple {tuple:?} does not index a coordinate for d={d}, ambient={ambient}")]
    BadCoordinateIndex {
        tuple: Vec<usize>,
        d: usize,
        ambient: usize,
    },
    #[error("shape mismatch: form over (d={fd}, ambient={fa}), vector over (d={vd}, ambient={va})")]
    ShapeMismatch {
        fd: usize,
        fa: usize,
        vd: usize,
        va: usize,
    },
    #[error("relations need 1 <= d <= n, got d={d}, n={n}")]
    BadRelationParams { d: usize, n: usize },
    #[error("the expansion identity needs d >= 3, got d={0}")]
    TooFewColumns(usize),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// Projective coordinate vector of a point of `G_{d,ambient}`: the d x d
/// minors of a basis matrix, scaled so the lexicographically first nonzero
/// coordinate is 1. Only nonzero coordinates are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerVector {
    ambient: usize,
    d: usize,
    field: Field,
    coords: BTreeMap<IndexTuple, Scalar>,
}

/// Coordinate vector of a subspace point: entry at `i` is the minor on rows
/// `i` and all columns.
pub fn pluecker(u: &SubspacePoint) -> Result<PlueckerVector, PlueckerError> {
    let ambient = u.ambient();
    let d = u.dim();
    let field = u.matrix().field();
    let cols: Vec<usize> = (1..=d).collect();
    let mut coords = BTreeMap::new();
    let mut first_nonzero: Option<Scalar> = None;
    for i in enumerate_index_tuples(d, ambient)? {
        let v = u.matrix().minor(i.entries(), &cols)?;
        if v.is_zero() {
            continue;
        }
        if first_nonzero.is_none() {
            first_nonzero = Some(v.clone());
        }
        coords.insert(i, v);
    }
    let lead = first_nonzero.expect("a full-column-rank matrix has a nonzero minor");
    let scale = lead.inv().expect("leading coordinate is nonzero");
    for v in coords.values_mut() {
        *v = &*v * &scale;
    }
    Ok(PlueckerVector {
        ambient,
        d,
        field,
        coords,
    })
}

impl PlueckerVector {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Value at a strictly increasing coordinate index.
    pub fn coord(&self, i: &IndexTuple) -> Result<Scalar, PlueckerError> {
        self.check_index(i)?;
        Ok(self
            .coords
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero()))
    }

    fn check_index(&self, i: &IndexTuple) -> Result<(), PlueckerError> {
        let in_range = i.len() == self.d && i.entries().iter().all(|&e| e <= self.ambient);
        if !in_range {
            return Err(PlueckerError::BadCoordinateIndex {
                tuple: i.entries().to_vec(),
                d: self.d,
                ambient: self.ambient,
            });
        }
        Ok(())
    }

    /// Nonzero coordinates in lexicographic index order.
    pub fn support(&self) -> impl Iterator<Item = (&IndexTuple, &Scalar)> {
        self.coords.iter()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coords
                .iter()
                .map(|(i, v)| json!({"p": i.entries(), "value": v.to_json()}))
                .collect(),
        )
    }
}

/// Integer-coefficient linear form in the coordinates of `G_{d,ambient}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    ambient: usize,
    d: usize,
    terms: Vec<(i64, IndexTuple)>,
}

impl LinearForm {
    pub fn zero(ambient: usize, d: usize) -> LinearForm {
        LinearForm {
            ambient,
            d,
            terms: Vec::new(),
        }
    }

    /// The single coordinate `p_i`.
    pub fn unit(ambient: usize, i: IndexTuple) -> LinearForm {
        LinearForm {
            ambient,
            d: i.len(),
            terms: vec![(1, i)],
        }
    }

    pub fn push_term(&mut self, coeff: i64, i: IndexTuple) {
        assert_eq!(i.len(), self.d, "term degree mismatch");
        assert!(
            self.terms.iter().all(|(_, j)| j != &i),
            "duplicate coordinate in form"
        );
        if coeff != 0 {
            self.terms.push((coeff, i));
        }
    }

    pub fn terms(&self) -> &[(i64, IndexTuple)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Exact value on a coordinate vector.
    pub fn evaluate(&self, pv: &PlueckerVector) -> Result<Scalar, PlueckerError> {
        if self.d != pv.d() || self.ambient != pv.ambient() {
            return Err(PlueckerError::ShapeMismatch {
                fd: self.d,
                fa: self.ambient,
                vd: pv.d(),
                va: pv.ambient(),
            });
        }
        let f = pv.field();
        let mut acc = f.zero();
        for (c, i) in &self.terms {
            acc = &acc + &(&f.from_i64(*c) * &pv.coord(i)?);
        }
        Ok(acc)
    }

    /// Signed text rendering, e.g. `+p[1,4] +p[2,5] +p[3,6]`.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(c, i)| {
                let sign = if *c < 0 { '-' } else { '+' };
                let mag = c.unsigned_abs();
                let idx = i
                    .entries()
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                if mag == 1 {
                    format!("{sign}p[{idx}]")
                } else {
                    format!("{sign}{mag}p[{idx}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.ambient,
            "d": self.d,
            "terms": self.terms.iter()
                .map(|(c, i)| json!({"c": c, "p": i.entries()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Output of the relation generator; identically-zero forms are dropped from
/// `forms` but counted.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub forms: Vec<LinearForm>,
    pub zero_forms_dropped: usize,
}

/// The linear forms whose common zero locus inside `G_{d,2n}` is exactly the
/// isotropic d-subspaces: empty for d = 1, the single trace form for d = 2,
/// and one form per `(d-2)`-tuple over `[1, 2n]` for d >= 3.
pub fn sp_relations(n: usize, d: usize) -> Result<RelationSet, PlueckerError> {
    if d == 0 || d > n {
        return Err(PlueckerError::BadRelationParams { d, n });
    }
    let ambient = 2 * n;
    if d == 1 {
        return Ok(RelationSet {
            forms: Vec::new(),
            zero_forms_dropped: 0,
        });
    }
    if d == 2 {
        let mut form = LinearForm::zero(ambient, 2);
        for t in 1..=n {
            form.push_term(1, IndexTuple::new(vec![t, n + t], ambient)?);
        }
        return Ok(RelationSet {
            forms: vec![form],
            zero_forms_dropped: 0,
        });
    }
    let mut forms = Vec::new();
    let mut dropped = 0;
    for i in enumerate_index_tuples(d - 2, ambient)? {
        let mut form = LinearForm::zero(ambient, d);
        for t in 1..=n {
            let mut raw = i.entries().to_vec();
            raw.push(t);
            raw.push(n + t);
            match normalize_tuple(&raw) {
                NormalizedTuple::Zero => continue,
                NormalizedTuple::Tuple(sorted) => {
                    let sign = if tau(&raw) % 2 == 0 { 1 } else { -1 };
                    form.push_term(sign, sorted);
                }
            }
        }
        if form.is_zero() {
            dropped += 1;
        } else {
            forms.push(form);
        }
    }
    Ok(RelationSet {
        forms,
        zero_forms_dropped: dropped,
    })
}

/// Verifies, on one concrete basis matrix, that the signed coordinate
/// `(-1)^tau(i, t, n+t) p_(i, t, n+t)` equals its Laplace expansion
/// `sum_{j1 < j2} (-1)^(j1+j2+1) M(t, j1, j2) D(i, j1, j2)`, where `M` is the
/// 2 x 2 minor on rows `t, n+t` and `D` the complementary minor on rows `i`
/// with columns `j1, j2` deleted. Both sides are computed independently from
/// raw minors.
pub fn laplace_identity_check(
    u: &SubspacePoint,
    i: &IndexTuple,
    t: usize,
    n: usize,
) -> Result<bool, PlueckerError> {
    let d = u.dim();
    if d < 3 {
        return Err(PlueckerError::TooFewColumns(d));
    }
    assert_eq!(i.len(), d - 2, "row tuple must have length d - 2");
    assert!(t >= 1 && t <= n, "t must lie in 1..=n");
    assert_eq!(u.ambient(), 2 * n, "ambient dimension must be 2n");
    let field = u.matrix().field();
    let all_cols: Vec<usize> = (1..=d).collect();

    let mut raw = i.entries().to_vec();
    raw.push(t);
    raw.push(n + t);
    let lhs = match normalize_tuple(&raw) {
        NormalizedTuple::Zero => field.zero(),
        NormalizedTuple::Tuple(sorted) => {
            let minor = u.matrix().minor(sorted.entries(), &all_cols)?;
            if tau(&raw) % 2 == 0 {
                minor
            } else {
                -minor
            }
        }
    };

    let mut rhs = field.zero();
    for j1 in 1..=d {
        for j2 in j1 + 1..=d {
            let m = u.matrix().minor(&[t, n + t], &[j1, j2])?;
            let kept: Vec<usize> = all_cols
                .iter()
                .copied()
                .filter(|&c| c != j1 && c != j2)
                .collect();
            let dd = u.matrix().minor(i.entries(), &kept)?;
            let term = &m * &dd;
            rhs = if (j1 + j2 + 1) % 2 == 0 {
                &rhs + &term
            } else {
                &rhs - &term
            };
        }
    }
    Ok(lhs == rhs)
}
