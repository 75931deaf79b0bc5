//! Index-tuple combinatorics for Grassmannians and their symplectic
//! analogues.
//!
//! Three families of 1-based tuples index everything in this crate:
//!
//! * [`IndexTuple`]: strictly increasing d-tuples in `[1, n]`, the classical
//!   Plücker index set `I_{d,n}`;
//! * [`SpIndex`]: d-tuples shaped as an increasing block of labels `<= n`
//!   followed by a decreasing block of labels `> n`, with pairwise distinct
//!   hats (`hat(i) = i` for `i <= n`, `i - n` otherwise). These abbreviate
//!   the Weyl group cosets of the symplectic flag variety `Sp_2n/P_d`;
//! * [`SpBarIndex`]: the same shape with distinct raw entries but hat
//!   repeats allowed — the image of `I_{d,2n}` under the involution
//!   [`s_perm`] that reverses the second block of basis labels.
//!
//! The chain `1 < 2 < ... < n < 2n < 2n-1 < ... < n+1` (generated by
//! [`sigma`]) induces the type C Bruhat order [`sp_bruhat_ge`]; the
//! componentwise order on `IndexTuple` is the type A one.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("tuple length {d} exceeds bound {n}")]
    LengthExceedsBound { d: usize, n: usize },
    #[error("empty tuple")]
    Empty,
    #[error("label {label} outside 1..={bound}")]
    LabelOutOfRange { label: usize, bound: usize },
    #[error("entries are not strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),
    #[error("bad block shape for half-rank {n}: {entries:?}")]
    BadShape { entries: Vec<usize>, n: usize },
    #[error("repeated hat value in {0:?}")]
    HatRepeat(Vec<usize>),
    #[error("repeated entry in {0:?}")]
    EntryRepeat(Vec<usize>),
    #[error("tuple lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// Strictly increasing tuple of 1-based labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(entries: Vec<usize>, bound: usize) -> Result<IndexTuple, IndexError> {
        if entries.is_empty() {
            return Err(IndexError::Empty);
        }
        for w in entries.windows(2) {
            if w[0] >= w[1] {
                return Err(IndexError::NotIncreasing(entries.clone()));
            }
        }
        check_bounds(&entries, bound)?;
        Ok(IndexTuple(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn check_bounds(entries: &[usize], bound: usize) -> Result<(), IndexError> {
    for &e in entries {
        if e == 0 || e > bound {
            return Err(IndexError::LabelOutOfRange {
                label: e,
                bound,
            });
        }
    }
    Ok(())
}

/// Hat map on `[1, 2n]`: identity below `n`, shift by `-n` above.
pub fn hat(i: usize, n: usize) -> usize {
    if i <= n {
        i
    } else {
        i - n
    }
}

/// Splits `entries` into the `<= n` prefix and `> n` suffix, validating the
/// increasing/decreasing block shape.
fn check_shape(entries: &[usize], n: usize) -> Result<usize, IndexError> {
    if entries.is_empty() {
        return Err(IndexError::Empty);
    }
    check_bounds(entries, 2 * n)?;
    let r = entries.iter().take_while(|&&e| e <= n).count();
    let (low, high) = entries.split_at(r);
    let low_ok = low.windows(2).all(|w| w[0] < w[1]);
    let high_ok = high.iter().all(|&e| e > n) && high.windows(2).all(|w| w[0] > w[1]);
    if !(low_ok && high_ok) {
        return Err(IndexError::BadShape {
            entries: entries.to_vec(),
            n,
        });
    }
    Ok(r)
}

/// Abbreviated Weyl coset of `Sp_2n/P_d`: shaped tuple with distinct hats.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct SpIndex(Vec<usize>);

impl SpIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<SpIndex, IndexError> {
        check_shape(&entries, n)?;
        let mut hats: Vec<usize> = entries.iter().map(|&e| hat(e, n)).collect();
        hats.sort_unstable();
        if hats.windows(2).any(|w| w[0] == w[1]) {
            return Err(IndexError::HatRepeat(entries));
        }
        Ok(SpIndex(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Same tuple as a member of the larger shape-sorted family.
    pub fn as_bar(&self) -> SpBarIndex {
        SpBarIndex(self.0.clone())
    }

    /// Entries in increasing order, as a coordinate index.
    pub fn sorted(&self) -> IndexTuple {
        let mut v = self.0.clone();
        v.sort_unstable();
        IndexTuple(v)
    }
}

impl std::fmt::Display for SpIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", SpBarIndex(self.0.clone()))
    }
}

/// Shape-sorted tuple with distinct raw entries (hat repeats allowed); the
/// image of a unique strictly increasing tuple under [`s_apply`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct SpBarIndex(Vec<usize>);

impl SpBarIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<SpBarIndex, IndexError> {
        check_shape(&entries, n)?;
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(IndexError::EntryRepeat(entries));
        }
        Ok(SpBarIndex(entries))
    }

    /// Shape-sort a set of distinct labels: `<= n` block increasing, then
    /// `> n` block decreasing.
    pub fn from_sorted(t: &IndexTuple, n: usize) -> Result<SpBarIndex, IndexError> {
        check_bounds(t.entries(), 2 * n)?;
        let mut low: Vec<usize> = t.entries().iter().copied().filter(|&e| e <= n).collect();
        let mut high: Vec<usize> = t.entries().iter().copied().filter(|&e| e > n).collect();
        low.sort_unstable();
        high.sort_unstable_by(|a, b| b.cmp(a));
        low.extend(high);
        Ok(SpBarIndex(low))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn sorted(&self) -> IndexTuple {
        let mut v = self.0.clone();
        v.sort_unstable();
        IndexTuple(v)
    }

    pub fn is_hat_distinct(&self, n: usize) -> bool {
        let mut hats: Vec<usize> = self.0.iter().map(|&e| hat(e, n)).collect();
        hats.sort_unstable();
        hats.windows(2).all(|w| w[0] != w[1])
    }

    /// Reinterpret as a Weyl coset when the hats are distinct.
    pub fn to_sp(&self, n: usize) -> Option<SpIndex> {
        if self.is_hat_distinct(n) {
            Some(SpIndex(self.0.clone()))
        } else {
            None
        }
    }
}

impl std::fmt::Display for SpBarIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All of `I_{d,n}` in lexicographic order; `C(n, d)` tuples.
pub fn enumerate_index_tuples(d: usize, n: usize) -> Result<Vec<IndexTuple>, IndexError> {
    if d == 0 {
        return Err(IndexError::Empty);
    }
    if d > n {
        return Err(IndexError::LengthExceedsBound { d, n });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(out: &mut Vec<IndexTuple>, cur: &mut Vec<usize>, from: usize, d: usize, n: usize) {
        if cur.len() == d {
            out.push(IndexTuple(cur.clone()));
            return;
        }
        let remaining = d - cur.len();
        for e in from..=n + 1 - remaining {
            cur.push(e);
            rec(out, cur, e + 1, d, n);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 1, d, n);
    Ok(out)
}

/// All Weyl cosets of `Sp_2n/P_d` in lexicographic order;
/// `C(n, d) * 2^d` tuples.
pub fn enumerate_sp(d: usize, n: usize) -> Result<Vec<SpIndex>, IndexError> {
    let hat_sets = enumerate_index_tuples(d, n)?;
    let mut out = Vec::with_capacity(hat_sets.len() << d);
    for hs in &hat_sets {
        for mask in 0u32..(1 << d) {
            let labels: Vec<usize> = hs
                .entries()
                .iter()
                .enumerate()
                .map(|(k, &h)| if mask & (1 << k) != 0 { h + n } else { h })
                .collect();
            let sorted = {
                let mut v = labels;
                v.sort_unstable();
                IndexTuple(v)
            };
            let bar = SpBarIndex::from_sorted(&sorted, n).expect("labels in range");
            out.push(SpIndex(bar.0));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The shape-sorted image family of `I_{d,2n}` in lexicographic order;
/// `C(2n, d)` tuples.
pub fn enumerate_spbar(d: usize, n: usize) -> Result<Vec<SpBarIndex>, IndexError> {
    let tuples = enumerate_index_tuples(d, 2 * n)?;
    let mut out: Vec<SpBarIndex> = tuples
        .iter()
        .map(|t| s_apply(t, n).expect("tuple in range"))
        .collect();
    out.sort();
    Ok(out)
}

/// One step down the chain `1 < ... < n < 2n < ... < n+1`; `sigma(1) = 0`,
/// standing for the zero subspace.
pub fn sigma(i: usize, n: usize) -> Result<usize, IndexError> {
    if i == 0 || i > 2 * n {
        return Err(IndexError::LabelOutOfRange { label: i, bound: 2 * n });
    }
    Ok(match i {
        1 => 0,
        i if i <= n => i - 1,
        i if i == 2 * n => n,
        i => i + 1,
    })
}

/// Position of label `i` in the chain `1, 2, ..., n, 2n, 2n-1, ..., n+1`.
pub fn rank_sp(i: usize, n: usize) -> Result<usize, IndexError> {
    if i == 0 || i > 2 * n {
        return Err(IndexError::LabelOutOfRange { label: i, bound: 2 * n });
    }
    Ok(if i <= n { i } else { 3 * n + 1 - i })
}

/// The involution of `[1, 2n]` fixing `1..n` and reversing `n+1..2n`
/// (`n+j` goes to `2n+1-j`).
pub fn s_perm(i: usize, n: usize) -> Result<usize, IndexError> {
    if i == 0 || i > 2 * n {
        return Err(IndexError::LabelOutOfRange { label: i, bound: 2 * n });
    }
    Ok(if i <= n { i } else { 3 * n + 1 - i })
}

/// Entrywise [`s_perm`], shape-sorted. A bijection from `I_{d,2n}` onto the
/// shape-sorted family, and an order isomorphism from the componentwise
/// order to the type C Bruhat order.
pub fn s_apply(t: &IndexTuple, n: usize) -> Result<SpBarIndex, IndexError> {
    check_bounds(t.entries(), 2 * n)?;
    let imgs: Vec<usize> = t
        .entries()
        .iter()
        .map(|&e| s_perm(e, n).expect("bounds checked"))
        .collect();
    let mut sorted = imgs;
    sorted.sort_unstable();
    SpBarIndex::from_sorted(&IndexTuple(sorted), n)
}

/// Inverse of [`s_apply`].
pub fn s_preimage(b: &SpBarIndex, n: usize) -> Result<IndexTuple, IndexError> {
    check_bounds(b.entries(), 2 * n)?;
    let mut pre: Vec<usize> = b
        .entries()
        .iter()
        .map(|&e| s_perm(e, n).expect("bounds checked"))
        .collect();
    pre.sort_unstable();
    Ok(IndexTuple(pre))
}

/// Type C Bruhat order `a >= b`, componentwise in chain position.
pub fn sp_bruhat_ge(a: &SpBarIndex, b: &SpBarIndex, n: usize) -> Result<bool, IndexError> {
    if a.len() != b.len() {
        return Err(IndexError::LengthMismatch(a.len(), b.len()));
    }
    for (&x, &y) in a.entries().iter().zip(b.entries()) {
        if rank_sp(x, n)? < rank_sp(y, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same order written by cases on the second block: `a_t >= b_t` when
/// `b_t <= n`, and `n < a_t <= b_t` when `b_t > n`. Kept as an independent
/// formulation; agrees with [`sp_bruhat_ge`] on every pair.
pub fn sp_bruhat_ge_cases(a: &SpBarIndex, b: &SpBarIndex, n: usize) -> Result<bool, IndexError> {
    if a.len() != b.len() {
        return Err(IndexError::LengthMismatch(a.len(), b.len()));
    }
    for (&x, &y) in a.entries().iter().zip(b.entries()) {
        check_bounds(&[x, y], 2 * n)?;
        let ok = if y <= n { x >= y } else { n < x && x <= y };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Type A Bruhat order `a >= b`, componentwise.
pub fn bruhat_ge(a: &IndexTuple, b: &IndexTuple) -> Result<bool, IndexError> {
    if a.len() != b.len() {
        return Err(IndexError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.entries().iter().zip(b.entries()).all(|(&x, &y)| x >= y))
}

/// Inversion count, extended by 0 on tuples with a repeated entry.
pub fn tau(t: &[usize]) -> usize {
    for (k, &x) in t.iter().enumerate() {
        if t[k + 1..].contains(&x) {
            return 0;
        }
    }
    let mut inv = 0;
    for k in 1..t.len() {
        inv += t[..k].iter().filter(|&&x| x > t[k]).count();
    }
    inv
}

/// Result of sorting a general tuple into a coordinate index: the sorted
/// tuple, or the distinguished zero when an entry repeats.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NormalizedTuple {
    Tuple(IndexTuple),
    Zero,
}

/// Sorts an arbitrary tuple of labels; a repeated entry yields
/// [`NormalizedTuple::Zero`]. Signs are carried externally via [`tau`].
pub fn normalize_tuple(t: &[usize]) -> NormalizedTuple {
    assert!(t.iter().all(|&e| e >= 1), "labels are 1-based");
    let mut v = t.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        NormalizedTuple::Zero
    } else {
        NormalizedTuple::Tuple(IndexTuple(v))
    }
}

/// Expands an abbreviated Weyl coset to the full 2n-permutation: positions
/// `d+1..n` take the unused hats in increasing order, and position `n+t`
/// takes the partner of position `t` (same hat, other copy).
pub fn full_weyl_tuple(w: &SpIndex, n: usize) -> Result<Vec<usize>, IndexError> {
    let d = w.len();
    if d > n {
        return Err(IndexError::LengthExceedsBound { d, n });
    }
    let mut first_half = w.entries().to_vec();
    let used: Vec<usize> = w.entries().iter().map(|&e| hat(e, n)).collect();
    for h in 1..=n {
        if !used.contains(&h) {
            first_half.push(h);
        }
    }
    let partners: Vec<usize> = first_half
        .iter()
        .map(|&e| if e <= n { e + n } else { e - n })
        .collect();
    first_half.extend(partners);
    Ok(first_half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_type_a_small() {
        let t = enumerate_index_tuples(2, 4).unwrap();
        let expect: Vec<Vec<usize>> = vec![
            vec![1, 2],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ];
        assert_eq!(
            t.iter().map(|x| x.entries().to_vec()).collect::<Vec<_>>(),
            expect
        );
        assert_eq!(enumerate_index_tuples(1, 3).unwrap().len(), 3);
        assert_eq!(enumerate_index_tuples(3, 6).unwrap().len(), 20);
        assert!(enumerate_index_tuples(5, 4).is_err());
    }

    #[test]
    fn enumerate_sp_small() {
        let got: Vec<Vec<usize>> = enumerate_sp(2, 2)
            .unwrap()
            .iter()
            .map(|x| x.entries().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![4, 3]]
        );
        assert_eq!(enumerate_sp(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate_sp(2, 3).unwrap().len(), 12);
    }

    #[test]
    fn sp_counts_match_closed_form() {
        fn binom(n: usize, d: usize) -> usize {
            (0..d).fold(1, |acc, k| acc * (n - k) / (k + 1))
        }
        for n in 1..=4 {
            for d in 1..=n {
                assert_eq!(enumerate_sp(d, n).unwrap().len(), binom(n, d) << d);
                assert_eq!(enumerate_spbar(d, n).unwrap().len(), binom(2 * n, d));
            }
        }
    }

    #[test]
    fn sigma_and_rank() {
        assert_eq!(sigma(6, 3).unwrap(), 3);
        assert_eq!(sigma(1, 3).unwrap(), 0);
        assert_eq!(sigma(4, 3).unwrap(), 5);
        assert_eq!(rank_sp(3, 3).unwrap(), 3);
        assert_eq!(rank_sp(6, 3).unwrap(), 4);
        assert_eq!(rank_sp(4, 3).unwrap(), 6);
        assert!(sigma(7, 3).is_err());
        assert!(rank_sp(0, 3).is_err());
        // sigma walks the chain one step down from every label
        for n in 1..=4 {
            for i in 1..=2 * n {
                let s = sigma(i, n).unwrap();
                let r = rank_sp(i, n).unwrap();
                if s == 0 {
                    assert_eq!(r, 1);
                } else {
                    assert_eq!(rank_sp(s, n).unwrap(), r - 1);
                }
            }
        }
    }

    #[test]
    fn s_perm_values() {
        assert_eq!(s_perm(4, 3).unwrap(), 6);
        assert_eq!(s_perm(6, 3).unwrap(), 4);
        assert_eq!(s_perm(5, 3).unwrap(), 5);
        for i in 1..=6 {
            assert_eq!(s_perm(s_perm(i, 3).unwrap(), 3).unwrap(), i);
        }
    }

    #[test]
    fn s_apply_examples() {
        let t = IndexTuple::new(vec![1, 2, 5], 6).unwrap();
        assert_eq!(s_apply(&t, 3).unwrap().entries(), &[1, 2, 5]);
        let t = IndexTuple::new(vec![3, 4], 4).unwrap();
        assert_eq!(s_apply(&t, 2).unwrap().entries(), &[4, 3]);
    }

    #[test]
    fn order_examples() {
        let n = 2;
        let b = |e: Vec<usize>| SpBarIndex::new(e, n).unwrap();
        assert!(sp_bruhat_ge(&b(vec![4, 3]), &b(vec![2, 3]), n).unwrap());
        assert!(sp_bruhat_ge(&b(vec![2, 3]), &b(vec![1, 4]), n).unwrap());
        assert!(!sp_bruhat_ge(&b(vec![1, 4]), &b(vec![2, 3]), n).unwrap());
        assert!(sp_bruhat_ge(&b(vec![1, 4]), &b(vec![1, 4]), n).unwrap());

        let i14 = IndexTuple::new(vec![1, 4], 4).unwrap();
        let i23 = IndexTuple::new(vec![2, 3], 4).unwrap();
        let i13 = IndexTuple::new(vec![1, 3], 4).unwrap();
        assert!(bruhat_ge(&IndexTuple::new(vec![2, 4], 4).unwrap(), &i13).unwrap());
        assert!(!bruhat_ge(&i14, &i23).unwrap());
        assert!(!bruhat_ge(&i23, &i14).unwrap());
        assert!(bruhat_ge(&i14, &i14).unwrap());
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(&[1, 1, 4]), 0);
        assert_eq!(tau(&[4, 2, 5]), 1);
        assert_eq!(tau(&[2, 1, 4]), 1);
        assert_eq!(tau(&[3, 2, 1]), 3);
        assert_eq!(tau(&[1, 2, 3]), 0);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize_tuple(&[2, 1, 4]),
            NormalizedTuple::Tuple(IndexTuple(vec![1, 2, 4]))
        );
        assert_eq!(normalize_tuple(&[1, 1, 4]), NormalizedTuple::Zero);
        assert_eq!(
            normalize_tuple(&[1, 2, 5]),
            NormalizedTuple::Tuple(IndexTuple(vec![1, 2, 5]))
        );
    }

    #[test]
    fn shapes_accept_empty_blocks_and_reject_bad_ones() {
        assert!(SpIndex::new(vec![1, 2], 2).is_ok()); // all low
        assert!(SpIndex::new(vec![4, 3], 2).is_ok()); // all high
        assert!(SpIndex::new(vec![3, 4], 2).is_err()); // high block must decrease
        assert!(SpIndex::new(vec![1, 3], 2).is_err()); // hat repeat
        assert!(SpBarIndex::new(vec![1, 3], 2).is_ok()); // hat repeat allowed here
        assert!(SpBarIndex::new(vec![3, 3], 2).is_err()); // raw repeat still rejected
        assert!(SpBarIndex::new(vec![3, 1], 2).is_err()); // low after high
    }

    #[test]
    fn weyl_expansion_partner_structure() {
        let w = SpIndex::new(vec![1, 5, 8, 7], 5).unwrap();
        let full = full_weyl_tuple(&w, 5).unwrap();
        assert_eq!(full, vec![1, 5, 8, 7, 4, 6, 10, 3, 2, 9]);
        // a permutation with matching hats between positions t and t+n
        let n = 5;
        let mut seen = full.clone();
        seen.sort_unstable();
        assert_eq!(seen, (1..=2 * n).collect::<Vec<_>>());
        for t in 0..n {
            assert_eq!(hat(full[t], n), hat(full[t + n], n));
        }
    }

    #[test]
    fn identity_coset_expands_to_identity() {
        let w = SpIndex::new(vec![1, 2], 4).unwrap();
        assert_eq!(full_weyl_tuple(&w, 4).unwrap(), vec![1, 2, 3, 4, 5, 6, 7, 8]);
    }
}
