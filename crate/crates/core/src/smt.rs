//! Standard monomials in the Plücker coordinates, of type A (factors weakly
//! decreasing componentwise) and type C (factors weakly decreasing in the
//! type C Bruhat order), with exact-rank verification of their basis and
//! independence properties.
//!
//! A type C standard monomial is *standard on* a Richardson datum `(u, v)`
//! when its factor chain fits inside the order interval `[v, u]` and every
//! factor is itself a coset (hat-distinct). The wider reading that admits
//! arbitrary shape-sorted factors inside the interval is exposed separately
//! as [`standard_on_richardson_bar`]; those monomials can be linearly
//! dependent on the locus, see the tests.

use crate::indices::{
    bruhat_ge, enumerate_index_tuples, enumerate_spbar, sp_bruhat_ge, IndexError, IndexTuple,
    SpBarIndex,
};
use crate::matrix::{Mat, SubspacePoint};
use crate::oracle::{richardson_points, OracleError};
use crate::pluecker::{pluecker, PlueckerError, PlueckerVector};
use crate::scalar::{Field, Scalar};
use crate::schubert::{RichardsonSpec, SchubertError};
use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SmtError {
    #[error("field F_{p} is too small for degree-{degree} rank tests (needs p > {required})")]
    FieldTooSmall {
        p: u32,
        degree: usize,
        required: usize,
    },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Pluecker(#[from] PlueckerError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Product of Plücker coordinates, one factor per index tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial<I> {
    factors: Vec<I>,
}

pub type MonomialA = Monomial<IndexTuple>;
pub type MonomialC = Monomial<SpBarIndex>;

impl<I> Monomial<I> {
    pub fn new(factors: Vec<I>) -> Monomial<I> {
        assert!(!factors.is_empty(), "a monomial has positive degree");
        Monomial { factors }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[I] {
        &self.factors
    }
}

impl MonomialA {
    pub fn evaluate(&self, pv: &PlueckerVector) -> Result<Scalar, PlueckerError> {
        let mut acc = pv.field().one();
        for f in &self.factors {
            acc = &acc * &pv.coord(f)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({"factors": self.factors.iter().map(|f| f.entries()).collect::<Vec<_>>()})
    }
}

impl MonomialC {
    pub fn evaluate(&self, pv: &PlueckerVector) -> Result<Scalar, PlueckerError> {
        let mut acc = pv.field().one();
        for f in &self.factors {
            acc = &acc * &pv.coord(&f.sorted())?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({"factors": self.factors.iter().map(|f| f.entries()).collect::<Vec<_>>()})
    }
}

/// Weakly decreasing chains of length `m` in a finite poset, lexicographic
/// in the element list order.
fn chains<T: Clone>(
    elements: &[T],
    m: usize,
    ge: impl Fn(&T, &T) -> bool,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(m);
    fn rec<T: Clone>(
        elements: &[T],
        m: usize,
        ge: &impl Fn(&T, &T) -> bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<T>>,
    ) {
        if cur.len() == m {
            out.push(cur.iter().map(|&k| elements[k].clone()).collect());
            return;
        }
        for k in 0..elements.len() {
            if let Some(&last) = cur.last() {
                if !ge(&elements[last], &elements[k]) {
                    continue;
                }
            }
            cur.push(k);
            rec(elements, m, ge, cur, out);
            cur.pop();
        }
    }
    rec(elements, m, &ge, &mut cur, &mut out);
    out
}

/// All type A standard monomials of degree `m` on `G_{d,n}`.
pub fn enumerate_standard_a(d: usize, n: usize, m: usize) -> Result<Vec<MonomialA>, SmtError> {
    if m == 0 {
        return Err(SmtError::BadParams("degree must be positive".into()));
    }
    let tuples = enumerate_index_tuples(d, n)?;
    Ok(chains(&tuples, m, |a, b| bruhat_ge(a, b).expect("same length"))
        .into_iter()
        .map(Monomial::new)
        .collect())
}

/// All type C standard monomials of degree `m` on `G_{d,2n}`: factors from
/// the shape-sorted family, weakly decreasing in the type C order.
pub fn enumerate_standard_c(d: usize, n: usize, m: usize) -> Result<Vec<MonomialC>, SmtError> {
    if m == 0 {
        return Err(SmtError::BadParams("degree must be positive".into()));
    }
    let bars = enumerate_spbar(d, n)?;
    Ok(chains(&bars, m, |a, b| {
        sp_bruhat_ge(a, b, n).expect("same length")
    })
    .into_iter()
    .map(Monomial::new)
    .collect())
}

/// Standard on the Richardson datum: the factor chain fits inside `[v, u]`
/// and every factor is a coset (hat-distinct).
pub fn standard_on_richardson(f: &MonomialC, spec: &RichardsonSpec) -> Result<bool, SmtError> {
    if !standard_on_richardson_bar(f, spec)? {
        return Ok(false);
    }
    Ok(f.factors().iter().all(|w| w.is_hat_distinct(spec.n())))
}

/// The wider reading: the factor chain fits inside `[v, u]`, factors taken
/// from the full shape-sorted family.
pub fn standard_on_richardson_bar(f: &MonomialC, spec: &RichardsonSpec) -> Result<bool, SmtError> {
    let n = spec.n();
    let ubar = spec.u().as_bar();
    let vbar = spec.v().as_bar();
    let first = &f.factors()[0];
    let last = &f.factors()[f.degree() - 1];
    Ok(sp_bruhat_ge(&ubar, first, n)? && sp_bruhat_ge(last, &vbar, n)?)
}

/// Multisets of size `m` over a list, nondecreasing in list position.
fn multisets<T: Clone>(elements: &[T], m: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(m);
    fn rec<T: Clone>(elements: &[T], m: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<T>>) {
        if cur.len() == m {
            out.push(cur.iter().map(|&k| elements[k].clone()).collect());
            return;
        }
        for k in from..elements.len() {
            cur.push(k);
            rec(elements, m, k, cur, out);
            cur.pop();
        }
    }
    rec(elements, m, 0, &mut cur, &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StandardKind {
    TypeA,
    TypeC,
}

/// Rank report for the graded-basis claim: at `sample_count` random
/// full-rank points, the evaluation rank of all degree-`m` coordinate
/// products must equal both the evaluation rank and the number of the
/// standard monomials.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub instance: Value,
    pub standard_count: usize,
    pub rank_all_products: usize,
    pub rank_standard: usize,
    pub enough_samples: bool,
    pub pass: bool,
}

impl BasisReport {
    pub fn to_json(&self) -> Value {
        json!({
            "claim": "smt-basis",
            "instance": self.instance,
            "expected": self.standard_count,
            "achieved": {
                "all_products": self.rank_all_products,
                "standard": self.rank_standard,
            },
            "pass": self.pass,
        })
    }
}

/// Degree-`m` graded rank test on `G_{d,ambient}` (`ambient` is `2n` for
/// type C). Over `F_p` the modulus must exceed four times the monomial
/// degree in the matrix entries.
pub fn verify_basis<R: Rng>(
    kind: StandardKind,
    d: usize,
    ambient: usize,
    m: usize,
    field: Field,
    sample_count: usize,
    rng: &mut R,
) -> Result<BasisReport, SmtError> {
    if let Field::Fp(p) = field {
        let required = 4 * m * d;
        if (p as usize) <= required {
            return Err(SmtError::FieldTooSmall {
                p,
                degree: m * d,
                required,
            });
        }
    }
    // coordinate tuples in enumeration order, plus the standard chains
    let (coords, standard): (Vec<IndexTuple>, Vec<Vec<IndexTuple>>) = match kind {
        StandardKind::TypeA => {
            let tuples = enumerate_index_tuples(d, ambient)?;
            let std = enumerate_standard_a(d, ambient, m)?
                .into_iter()
                .map(|f| f.factors().to_vec())
                .collect();
            (tuples, std)
        }
        StandardKind::TypeC => {
            if ambient % 2 != 0 {
                return Err(SmtError::BadParams(
                    "type C needs an even ambient dimension".into(),
                ));
            }
            let n = ambient / 2;
            let bars = enumerate_spbar(d, n)?;
            let std = enumerate_standard_c(d, n, m)?
                .into_iter()
                .map(|f| f.factors().iter().map(|b| b.sorted()).collect())
                .collect();
            (bars.iter().map(|b| b.sorted()).collect(), std)
        }
    };
    let all_products = multisets(&coords, m);
    let points: Vec<PlueckerVector> = (0..sample_count)
        .map(|_| {
            let u = loop {
                let cand = Mat::random(ambient, d, field, (-3, 3), rng);
                if cand.rank() == d {
                    break SubspacePoint::new(cand).expect("rank checked");
                }
            };
            pluecker(&u)
        })
        .collect::<Result<_, _>>()?;
    let eval = |products: &[Vec<IndexTuple>]| -> Result<Mat, SmtError> {
        let mut rows = Vec::with_capacity(points.len());
        for pv in &points {
            let mut row = Vec::with_capacity(products.len());
            for prod in products {
                let mut acc = field.one();
                for t in prod {
                    acc = &acc * &pv.coord(t)?;
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(Mat::from_rows(field, rows))
    };
    let all_mat = eval(&all_products)?;
    let std_mat = eval(&standard)?;
    let rank_all = all_mat.rank();
    let rank_std = std_mat.rank();
    let enough = sample_count >= standard.len();
    let pass = enough && rank_all == standard.len() && rank_std == standard.len();
    Ok(BasisReport {
        instance: json!({
            "kind": match kind { StandardKind::TypeA => "A", StandardKind::TypeC => "C" },
            "d": d,
            "ambient": ambient,
            "m": m,
            "field": field.to_string(),
            "points": sample_count,
            "all_products": all_products.len(),
            "enough_samples": enough,
        }),
        standard_count: standard.len(),
        rank_all_products: rank_all,
        rank_standard: rank_std,
        enough_samples: enough,
        pass,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndependenceStatus {
    Pass,
    RankDeficient,
    NotEnoughPoints,
}

/// Rank report for independence of the standard-on-Richardson monomials at
/// a given set of certified locus points.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub instance: Value,
    pub monomial_count: usize,
    pub achieved_rank: usize,
    pub status: IndependenceStatus,
}

impl IndependenceReport {
    pub fn pass(&self) -> bool {
        self.status == IndependenceStatus::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": "smt-richardson",
            "instance": self.instance,
            "expected": self.monomial_count,
            "achieved": self.achieved_rank,
            "status": match self.status {
                IndependenceStatus::Pass => "pass",
                IndependenceStatus::RankDeficient => "rank-deficient",
                IndependenceStatus::NotEnoughPoints => "not-enough-points",
            },
            "pass": self.pass(),
        })
    }
}

/// Full-column-rank test for the degree-`m` standard-on-`(u,v)` monomials
/// evaluated at the given locus points. Too few points is reported
/// distinctly from a genuine deficiency.
pub fn verify_independence_on_richardson(
    spec: &RichardsonSpec,
    m: usize,
    points: &[SubspacePoint],
) -> Result<IndependenceReport, SmtError> {
    let monomials: Vec<MonomialC> = enumerate_standard_c(spec.d(), spec.n(), m)?
        .into_iter()
        .filter_map(|f| match standard_on_richardson(&f, spec) {
            Ok(true) => Some(Ok(f)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_, _>>()?;
    let instance = |field: String, pts: usize| {
        json!({
            "spec": spec.to_json(),
            "m": m,
            "field": field,
            "points": pts,
        })
    };
    if points.len() < monomials.len() || points.is_empty() {
        return Ok(IndependenceReport {
            instance: instance("-".into(), points.len()),
            monomial_count: monomials.len(),
            achieved_rank: 0,
            status: IndependenceStatus::NotEnoughPoints,
        });
    }
    let field = points[0].matrix().field();
    let mut rows = Vec::with_capacity(points.len());
    for p in points {
        let pv = pluecker(p)?;
        let row: Vec<Scalar> = monomials
            .iter()
            .map(|f| f.evaluate(&pv))
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    let rank = Mat::from_rows(field, rows).rank();
    let status = if rank == monomials.len() {
        IndependenceStatus::Pass
    } else {
        IndependenceStatus::RankDeficient
    };
    Ok(IndependenceReport {
        instance: instance(field.to_string(), points.len()),
        monomial_count: monomials.len(),
        achieved_rank: rank,
        status,
    })
}

/// Runs the independence test on the exhaustive `F_q` locus points for each
/// modulus in `qs`, stopping at the first pass; the final report carries the
/// modulus it was produced at.
pub fn verify_independence_escalating(
    spec: &RichardsonSpec,
    m: usize,
    qs: &[u32],
    budget: u64,
) -> Result<IndependenceReport, SmtError> {
    assert!(!qs.is_empty(), "need at least one modulus");
    let mut last = None;
    for &q in qs {
        let points = richardson_points(q, spec, budget)?;
        let report = verify_independence_on_richardson(spec, m, &points)?;
        let done = report.pass();
        last = Some(report);
        if done {
            break;
        }
    }
    Ok(last.expect("loop ran"))
}
