//! Brute-force ground truth over finite fields: exhaustive enumeration of
//! d-subspaces of `F_q^2n` in a canonical echelon form, and set-level
//! verdicts for every claim the rest of the crate computes symbolically.
//!
//! Everything here is deterministic given its parameters; the seeded
//! verdicts ([`verify_lemma43`], [`verify_laplace`]) derive all randomness
//! from an explicit seed.

use crate::indices::{enumerate_index_tuples, enumerate_sp, enumerate_spbar, sp_bruhat_ge};
use crate::matrix::{Mat, SubspacePoint};
use crate::pluecker::{laplace_identity_check, pluecker, sp_relations, PlueckerError};
use crate::schubert::{
    e_point, opp_schubert_member, richardson_generators, richardson_member, schubert_member,
    Filtration, GeneratorLevel, RichardsonSpec, SchubertError,
};
use crate::scalar::Field;
use crate::symplectic::{is_isotropic, SymplecticContext};
use num::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

/// Default cap on the number of subspaces an exhaustive run may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration of {count} subspaces exceeds the budget of {budget}")]
    BudgetExceeded { count: BigUint, budget: u64 },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
    #[error(transparent)]
    Pluecker(#[from] PlueckerError),
}

/// Number of d-subspaces of `F_q^n`, the Gaussian binomial coefficient.
pub fn gaussian_binomial(n: usize, d: usize, q: u32) -> BigUint {
    assert!(d <= n);
    let q = BigUint::from(q);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for k in 0..d {
        num *= q.pow((n - k) as u32) - 1u32;
        den *= q.pow((k + 1) as u32) - 1u32;
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

/// Streams every d-subspace of `F_q^n2` exactly once, as the canonical
/// reduced-column-echelon basis: pivot rows strictly increase left to right,
/// pivot entries are 1, the other pivot rows are zero, and the free entries
/// sit below the pivots. Iteration is lexicographic on the pivot row set and
/// then on the free entries.
pub struct SubspaceEnumeration {
    field: Field,
    n2: usize,
    d: usize,
    pivot_sets: Vec<Vec<usize>>, // 0-based pivot rows per set
    set_idx: usize,
    cells: Vec<(usize, usize)>, // (row, col) of free entries, column-major
    values: Vec<u32>,
    exhausted_current: bool,
}

impl SubspaceEnumeration {
    fn new(q: u32, n2: usize, d: usize) -> SubspaceEnumeration {
        let pivot_sets = enumerate_index_tuples(d, n2)
            .expect("1 <= d <= n2")
            .into_iter()
            .map(|t| t.entries().iter().map(|&e| e - 1).collect())
            .collect();
        let mut e = SubspaceEnumeration {
            field: Field::fp(q),
            n2,
            d,
            pivot_sets,
            set_idx: 0,
            cells: Vec::new(),
            values: Vec::new(),
            exhausted_current: false,
        };
        e.load_set();
        e
    }

    fn load_set(&mut self) {
        self.cells.clear();
        if self.set_idx >= self.pivot_sets.len() {
            return;
        }
        let pivots = &self.pivot_sets[self.set_idx];
        for (col, &p) in pivots.iter().enumerate() {
            for row in p + 1..self.n2 {
                if !pivots.contains(&row) {
                    self.cells.push((row, col));
                }
            }
        }
        self.values = vec![0; self.cells.len()];
        self.exhausted_current = false;
    }

    fn emit(&self) -> SubspacePoint {
        let pivots = &self.pivot_sets[self.set_idx];
        let f = self.field;
        let mut m = Mat::zeros(self.n2, self.d, f);
        for (col, &p) in pivots.iter().enumerate() {
            m.set(p, col, f.one());
        }
        for (k, &(row, col)) in self.cells.iter().enumerate() {
            m.set(row, col, f.from_i64(self.values[k] as i64));
        }
        SubspacePoint::new(m).expect("echelon basis has full column rank")
    }

    fn advance(&mut self) {
        let q = match self.field {
            Field::Fp(q) => q,
            Field::Rational => unreachable!(),
        };
        // odometer over the free entries, last cell fastest
        for k in (0..self.values.len()).rev() {
            self.values[k] += 1;
            if self.values[k] < q {
                return;
            }
            self.values[k] = 0;
        }
        self.exhausted_current = true;
    }
}

impl Iterator for SubspaceEnumeration {
    type Item = SubspacePoint;

    fn next(&mut self) -> Option<SubspacePoint> {
        while self.set_idx < self.pivot_sets.len() {
            if self.exhausted_current {
                self.set_idx += 1;
                self.load_set();
                continue;
            }
            let point = self.emit();
            self.advance();
            return Some(point);
        }
        None
    }
}

/// Exhaustive canonical enumeration, refused when the subspace count
/// exceeds `budget`.
pub fn enumerate_subspaces(
    q: u32,
    n2: usize,
    d: usize,
    budget: u64,
) -> Result<SubspaceEnumeration, OracleError> {
    if d == 0 || d > n2 {
        return Err(OracleError::BadParams(format!(
            "need 1 <= d <= ambient, got d={d}, ambient={n2}"
        )));
    }
    let count = gaussian_binomial(n2, d, q);
    if count > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded { count, budget });
    }
    Ok(SubspaceEnumeration::new(q, n2, d))
}

/// All `F_q` points of the symplectic flag variety: the isotropic
/// d-subspaces of `F_q^2n`.
pub fn gp_points(q: u32, n: usize, d: usize, budget: u64) -> Result<Vec<SubspacePoint>, OracleError> {
    if d > n {
        return Err(OracleError::BadParams(format!("need d <= n, got d={d}, n={n}")));
    }
    let ctx = SymplecticContext::new(n, Field::fp(q));
    let mut out = Vec::new();
    for u in enumerate_subspaces(q, 2 * n, d, budget)? {
        if is_isotropic(&u, &ctx).expect("shapes match") {
            out.push(u);
        }
    }
    Ok(out)
}

/// All `F_q` points of the Richardson locus of `spec`.
pub fn richardson_points(
    q: u32,
    spec: &RichardsonSpec,
    budget: u64,
) -> Result<Vec<SubspacePoint>, OracleError> {
    let fil = Filtration::new(spec.n(), Field::fp(q));
    let mut out = Vec::new();
    for u in gp_points(q, spec.n(), spec.d(), budget)? {
        if richardson_member(&u, spec, &fil)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// Outcome of one exhaustive check. For claims comparing two point sets,
/// `lhs_count`/`rhs_count` are the two cardinalities; for claims quantified
/// over pairs they are (pairs passing, pairs checked). At most ten failure
/// witnesses are retained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: String,
    pub params: Value,
    pub lhs_count: u64,
    pub rhs_count: u64,
    pub equal: bool,
    pub witnesses_of_failure: Vec<Value>,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        self.equal
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "params": self.params,
            "lhs_count": self.lhs_count,
            "rhs_count": self.rhs_count,
            "equal": self.equal,
            "witnesses_of_failure": self.witnesses_of_failure,
        })
    }

    fn witness(&mut self, w: Value) {
        if self.witnesses_of_failure.len() < 10 {
            self.witnesses_of_failure.push(w);
        }
    }
}

/// Claim `thm44`: inside the full Grassmannian over `F_q`, the subspaces
/// annihilated by every linear relation are exactly the isotropic ones.
pub fn verify_thm44(q: u32, n: usize, d: usize, budget: u64) -> Result<Verdict, OracleError> {
    let relations = sp_relations(n, d)?;
    let ctx = SymplecticContext::new(n, Field::fp(q));
    let mut verdict = Verdict {
        claim: "thm44".into(),
        params: json!({"q": q, "n": n, "d": d}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for u in enumerate_subspaces(q, 2 * n, d, budget)? {
        let pv = pluecker(&u)?;
        let mut annihilated = true;
        for form in &relations.forms {
            if !form.evaluate(&pv)?.is_zero() {
                annihilated = false;
                break;
            }
        }
        let isotropic = is_isotropic(&u, &ctx).expect("shapes match");
        if annihilated {
            verdict.lhs_count += 1;
        }
        if isotropic {
            verdict.rhs_count += 1;
        }
        if annihilated != isotropic {
            verdict.equal = false;
            verdict.witness(json!({
                "matrix": u.to_json(),
                "relations_vanish": annihilated,
                "isotropic": isotropic,
            }));
        }
    }
    Ok(verdict)
}

/// Claim `thm411`: inside the full Grassmannian over `F_q`, the common zero
/// locus of the ambient Richardson generators equals the membership-defined
/// Richardson point set.
pub fn verify_thm411(q: u32, spec: &RichardsonSpec, budget: u64) -> Result<Verdict, OracleError> {
    let generators = richardson_generators(spec, GeneratorLevel::Ambient)?;
    let ctx = SymplecticContext::new(spec.n(), Field::fp(q));
    let fil = Filtration::new(spec.n(), Field::fp(q));
    let mut verdict = Verdict {
        claim: "thm411".into(),
        params: json!({"q": q, "spec": spec.to_json()}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for u in enumerate_subspaces(q, 2 * spec.n(), spec.d(), budget)? {
        let pv = pluecker(&u)?;
        let mut annihilated = true;
        for g in &generators {
            if !g.evaluate(&pv)?.is_zero() {
                annihilated = false;
                break;
            }
        }
        let member =
            is_isotropic(&u, &ctx).expect("shapes match") && richardson_member(&u, spec, &fil)?;
        if annihilated {
            verdict.lhs_count += 1;
        }
        if member {
            verdict.rhs_count += 1;
        }
        if annihilated != member {
            verdict.equal = false;
            verdict.witness(json!({
                "matrix": u.to_json(),
                "generators_vanish": annihilated,
                "member": member,
            }));
        }
    }
    Ok(verdict)
}

/// Claim `prop35` (order-level nonemptiness): for every coset pair,
/// `u >= v` forces `e_v` into the Richardson locus, and incomparable pairs
/// give the empty locus over `F_q`.
pub fn verify_prop35(q: u32, n: usize, d: usize, budget: u64) -> Result<Verdict, OracleError> {
    let cosets = enumerate_sp(d, n).map_err(SchubertError::from)?;
    let ctx = SymplecticContext::new(n, Field::fp(q));
    let fil = Filtration::new(n, Field::fp(q));
    let points = gp_points(q, n, d, budget)?;
    let mut verdict = Verdict {
        claim: "prop35".into(),
        params: json!({"q": q, "n": n, "d": d}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for u in &cosets {
        for v in &cosets {
            verdict.rhs_count += 1;
            let spec = RichardsonSpec::new(n, d, u.clone(), v.clone())?;
            let ok = if spec.is_order_nonempty()? {
                let ev = e_point(v.entries(), &ctx)?;
                richardson_member(&ev, &spec, &fil)?
            } else {
                let mut empty = true;
                for p in &points {
                    if richardson_member(p, &spec, &fil)? {
                        empty = false;
                        break;
                    }
                }
                empty
            };
            if ok {
                verdict.lhs_count += 1;
            } else {
                verdict.equal = false;
                verdict.witness(json!({"u": u.entries(), "v": v.entries()}));
            }
        }
    }
    Ok(verdict)
}

/// Shared engine for the two vanishing characterizations: `opposite = false`
/// handles Schubert varieties (`p_j` vanishes on X_i iff NOT i >= j),
/// `opposite = true` the opposite ones (iff NOT i <= j). When the
/// coordinate survives and `e_j` is itself a flag point, it must witness the
/// nonvanishing.
fn verify_vanishing(
    claim: &str,
    q: u32,
    n: usize,
    d: usize,
    budget: u64,
    opposite: bool,
) -> Result<Verdict, OracleError> {
    let cosets = enumerate_sp(d, n).map_err(SchubertError::from)?;
    let bars = enumerate_spbar(d, n).map_err(SchubertError::from)?;
    let ctx = SymplecticContext::new(n, Field::fp(q));
    let fil = Filtration::new(n, Field::fp(q));
    let points = gp_points(q, n, d, budget)?;
    let coords: Vec<_> = points.iter().map(|p| pluecker(p)).collect::<Result<_, _>>()?;
    let mut verdict = Verdict {
        claim: claim.into(),
        params: json!({"q": q, "n": n, "d": d}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for i in &cosets {
        let in_variety: Vec<bool> = points
            .iter()
            .map(|p| {
                if opposite {
                    opp_schubert_member(p, i, &fil)
                } else {
                    schubert_member(p, i, &fil)
                }
            })
            .collect::<Result<_, _>>()?;
        for j in &bars {
            verdict.rhs_count += 1;
            let sorted = j.sorted();
            let mut vanishes = true;
            for (k, pv) in coords.iter().enumerate() {
                if in_variety[k] && !pv.coord(&sorted)?.is_zero() {
                    vanishes = false;
                    break;
                }
            }
            let related = if opposite {
                sp_bruhat_ge(j, &i.as_bar(), n).map_err(SchubertError::from)?
            } else {
                sp_bruhat_ge(&i.as_bar(), j, n).map_err(SchubertError::from)?
            };
            let mut ok = vanishes == !related;
            // fixed-point witness, available whenever e_j is a flag point
            if ok && related {
                if let Some(jsp) = j.to_sp(n) {
                    let ej = e_point(jsp.entries(), &ctx)?;
                    let member = if opposite {
                        opp_schubert_member(&ej, i, &fil)?
                    } else {
                        schubert_member(&ej, i, &fil)?
                    };
                    ok = member && pluecker(&ej)?.coord(&sorted)?.is_one();
                }
            }
            if ok {
                verdict.lhs_count += 1;
            } else {
                verdict.equal = false;
                verdict.witness(json!({
                    "i": i.entries(),
                    "j": j.entries(),
                    "vanishes": vanishes,
                    "comparable": related,
                }));
            }
        }
    }
    Ok(verdict)
}

/// Claim `prop47`: on Schubert varieties, `p_j` vanishes identically iff
/// the coset is not above `j`.
pub fn verify_prop47(q: u32, n: usize, d: usize, budget: u64) -> Result<Verdict, OracleError> {
    verify_vanishing("prop47", q, n, d, budget, false)
}

/// Claim `prop48`: the opposite-Schubert dual of `prop47`.
pub fn verify_prop48(q: u32, n: usize, d: usize, budget: u64) -> Result<Verdict, OracleError> {
    verify_vanishing("prop48", q, n, d, budget, true)
}

/// Claim `lemma43`: for seeded random invertible matrices of order up to
/// `max_order`, the s-th compound times its signed cofactor companion is
/// `det * identity`, and the compound is invertible, for every `s`.
pub fn verify_lemma43(q: u32, max_order: usize, trials: usize, seed: u64) -> Verdict {
    let field = Field::fp(q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdict = Verdict {
        claim: "lemma43".into(),
        params: json!({"q": q, "max_order": max_order, "trials": trials, "seed": seed}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for trial in 0..trials {
        let r = trial % max_order + 1;
        let a = loop {
            let cand = Mat::random(r, r, field, (-3, 3), &mut rng);
            if !cand.det().expect("square").is_zero() {
                break cand;
            }
        };
        let det = a.det().expect("square");
        for s in 1..=r {
            verdict.rhs_count += 1;
            let b = a.compound(s).expect("s <= r");
            let c = a.cofactor_compound(s).expect("s <= r");
            let product_ok = b.mul(&c) == Mat::identity(b.rows(), field).scale(&det);
            let invertible = b.rank() == b.rows();
            if product_ok && invertible {
                verdict.lhs_count += 1;
            } else {
                verdict.equal = false;
                verdict.witness(json!({
                    "trial": trial,
                    "order": r,
                    "s": s,
                    "product_ok": product_ok,
                    "compound_invertible": invertible,
                }));
            }
        }
    }
    verdict
}

/// Claim `laplace`: the signed-coordinate expansion identity holds on
/// seeded random full-rank matrices, for every row tuple and every `t`.
pub fn verify_laplace(
    q: u32,
    n: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Verdict, OracleError> {
    if d < 3 || d > n {
        return Err(OracleError::BadParams(format!(
            "need 3 <= d <= n, got d={d}, n={n}"
        )));
    }
    let field = Field::fp(q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples = enumerate_index_tuples(d - 2, 2 * n).map_err(SchubertError::from)?;
    let mut verdict = Verdict {
        claim: "laplace".into(),
        params: json!({"q": q, "n": n, "d": d, "trials": trials, "seed": seed}),
        lhs_count: 0,
        rhs_count: 0,
        equal: true,
        witnesses_of_failure: Vec::new(),
    };
    for trial in 0..trials {
        let u = loop {
            let cand = Mat::random(2 * n, d, field, (-3, 3), &mut rng);
            if cand.rank() == d {
                break SubspacePoint::new(cand).expect("rank checked");
            }
        };
        for i in &tuples {
            for t in 1..=n {
                verdict.rhs_count += 1;
                if laplace_identity_check(&u, i, t, n)? {
                    verdict.lhs_count += 1;
                } else {
                    verdict.equal = false;
                    verdict.witness(json!({
                        "trial": trial,
                        "i": i.entries(),
                        "t": t,
                        "matrix": u.to_json(),
                    }));
                }
            }
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::SpIndex;

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(6, 3, 2), BigUint::from(1395u32));
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(6, 2, 2), BigUint::from(651u32));
    }

    #[test]
    fn enumeration_count_and_canonical_uniqueness() {
        let pts: Vec<_> = enumerate_subspaces(2, 4, 2, DEFAULT_BUDGET)
            .unwrap()
            .collect();
        assert_eq!(pts.len(), 35);
        for p in &pts {
            assert_eq!(&p.canonical(), p.matrix(), "already canonical");
        }
        let mut canon: Vec<_> = pts.iter().map(|p| format!("{:?}", p.matrix())).collect();
        canon.sort();
        canon.dedup();
        assert_eq!(canon.len(), 35, "no duplicates");
    }

    #[test]
    fn enumeration_matches_gaussian_binomial_widely() {
        for &q in &[2u32, 3] {
            for n2 in 2..=6 {
                for d in 1..=n2.min(3) {
                    let count = enumerate_subspaces(q, n2, d, DEFAULT_BUDGET).unwrap().count();
                    assert_eq!(
                        BigUint::from(count as u64),
                        gaussian_binomial(n2, d, q),
                        "q={q} n2={n2} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_refusal_carries_count() {
        let Err(err) = enumerate_subspaces(3, 8, 4, 1000) else {
            panic!("expected budget refusal");
        };
        match err {
            OracleError::BudgetExceeded { count, budget } => {
                assert_eq!(budget, 1000);
                assert_eq!(count, gaussian_binomial(8, 4, 3));
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn flag_point_counts() {
        assert_eq!(gp_points(2, 2, 2, DEFAULT_BUDGET).unwrap().len(), 15);
        assert_eq!(gp_points(3, 2, 2, DEFAULT_BUDGET).unwrap().len(), 40);
    }

    #[test]
    fn thm44_smallest_instance() {
        let v = verify_thm44(2, 2, 2, DEFAULT_BUDGET).unwrap();
        assert!(v.pass());
        assert_eq!((v.lhs_count, v.rhs_count), (15, 15));
    }

    #[test]
    fn thm411_single_point_instance() {
        let w = SpIndex::new(vec![1, 2], 2).unwrap();
        let spec = RichardsonSpec::new(2, 2, w.clone(), w).unwrap();
        let v = verify_thm411(2, &spec, DEFAULT_BUDGET).unwrap();
        assert!(v.pass());
        assert_eq!((v.lhs_count, v.rhs_count), (1, 1));
    }

    #[test]
    fn prop35_smallest_instance() {
        let v = verify_prop35(2, 2, 2, DEFAULT_BUDGET).unwrap();
        assert!(v.pass());
        assert_eq!(v.rhs_count, 16);
    }

    #[test]
    fn lemma43_short_run() {
        let v = verify_lemma43(1009, 4, 12, 7);
        assert!(v.pass());
        assert_eq!(v.rhs_count, (1 + 2 + 3 + 4) * 3);
    }

    #[test]
    fn laplace_short_run() {
        let v = verify_laplace(1009, 3, 3, 5, 11).unwrap();
        assert!(v.pass());
        assert_eq!(v.rhs_count, 5 * 6 * 3);
    }

    #[test]
    fn verdict_json_fields() {
        let v = verify_thm44(2, 2, 2, DEFAULT_BUDGET).unwrap();
        let j = v.to_json();
        for key in ["claim", "params", "lhs_count", "rhs_count", "equal", "witnesses_of_failure"] {
            assert!(j.get(key).is_some(), "missing {key}");
        }
    }
}
