//! Characteristic-zero representation combinatorics for `SL_{n+1}`:
//! tensor-product multiplicities, weight-space dimensions, the Weyl
//! dimension formula, and a brute-force character oracle.
//!
//! Everything is exact integer arithmetic. Weights use fundamental
//! coordinates; partitions are the `lambda`-lifts with the last entry
//! normalized to zero (full columns removed).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{KlError, Result};
use crate::weyl::Weight;

/// Dominant weight: nonnegative fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight {
    coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().any(|&c| c < 0) {
            return Err(KlError::Parse("dominant weight needs nonnegative coordinates".into()));
        }
        Ok(DominantWeight { coords })
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { coords: vec![0; n] }
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        DominantWeight { coords: Weight::fundamental(n, i).coords().to_vec() }
    }

    pub fn two_rho(n: usize) -> Self {
        DominantWeight { coords: vec![2; n] }
    }

    /// Highest root weight `x_1 + x_n` (the adjoint highest weight).
    pub fn adjoint(n: usize) -> Self {
        let mut coords = vec![0; n];
        coords[0] += 1;
        coords[n - 1] += 1;
        DominantWeight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn weight(&self) -> Weight {
        Weight::new(self.coords.clone())
    }

    pub fn dual(&self) -> DominantWeight {
        let mut coords = self.coords.clone();
        coords.reverse();
        DominantWeight { coords }
    }

    /// Weakly decreasing partition `lambda_i = a_i + ... + a_n`,
    /// `lambda_{n+1} = 0`.
    pub fn partition(&self) -> Vec<i64> {
        Weight::new(self.coords.clone()).lambda_lift()
    }
}

/// Partition with at most `n+1` rows; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.iter().any(|&p| p < 0) {
            return Err(KlError::Parse("partition parts must be weakly decreasing and >= 0".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Reduce modulo full columns of height `n+1` and convert back to a
    /// dominant weight of rank `n`.
    pub fn to_dominant(&self, n: usize) -> Result<DominantWeight> {
        if self.parts.len() > n + 1 {
            return Err(KlError::Parse(format!(
                "partition has {} rows, more than {}",
                self.parts.len(),
                n + 1
            )));
        }
        let mut padded = self.parts.clone();
        padded.resize(n + 1, 0);
        let last = padded[n];
        let coords = (0..n).map(|i| padded[i] - padded[i + 1]).collect();
        let _ = last;
        DominantWeight::new(coords)
    }
}

/// Littlewood-Richardson count of skew tableaux of shape `outer/inner` with
/// the given content, filled in reverse reading order with the lattice-word
/// condition maintained incrementally.
fn lr_fillings(outer: &[i64], inner: &[i64], content: &[i64]) -> u64 {
    let rows = outer.len();
    let mut inner = inner.to_vec();
    inner.resize(rows, 0);
    let mut cells: Vec<(usize, i64)> = Vec::new();
    for (r, (&o, &i)) in outer.iter().zip(&inner).enumerate() {
        for c in i..o {
            cells.push((r, c));
        }
    }
    if cells.len() as i64 != content.iter().sum::<i64>() {
        return 0;
    }
    // reverse reading order: rows top to bottom, right to left inside a row
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let m = content.len();
    let mut grid: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut counts = vec![0i64; m];
    let mut total = 0u64;
    fn rec(
        idx: usize,
        cells: &[(usize, i64)],
        content: &[i64],
        grid: &mut BTreeMap<(usize, i64), usize>,
        counts: &mut Vec<i64>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        for val in 0..content.len() {
            if counts[val] >= content[val] {
                continue;
            }
            // lattice condition on the reverse reading word
            if val > 0 && counts[val] + 1 > counts[val - 1] {
                continue;
            }
            // rows weakly increase left to right; the right neighbour is
            // already placed
            if let Some(&right) = grid.get(&(r, c + 1)) {
                if right < val {
                    continue;
                }
            }
            // columns strictly increase top to bottom
            if r > 0 {
                if let Some(&up) = grid.get(&(r - 1, c)) {
                    if up >= val {
                        continue;
                    }
                }
            }
            grid.insert((r, c), val);
            counts[val] += 1;
            rec(idx + 1, cells, content, grid, counts, total);
            counts[val] -= 1;
            grid.remove(&(r, c));
        }
    }
    rec(0, &cells, content, &mut grid, &mut counts, &mut total);
    total
}

/// Multiplicity of `V(z)` in `V(x) (x) V(y)`: the Littlewood-Richardson
/// coefficient after partition conversion, with columns of height `n+1`
/// removed.
pub fn tensor_mult(x: &DominantWeight, y: &DominantWeight, z: &DominantWeight) -> Result<u64> {
    let n = x.rank();
    if y.rank() != n || z.rank() != n {
        return Err(KlError::RankMismatch(n, y.rank().max(z.rank())));
    }
    let np = (n + 1) as i64;
    let lx = x.partition();
    let ly = y.partition();
    let lz = z.partition();
    let excess = lx.iter().sum::<i64>() + ly.iter().sum::<i64>() - lz.iter().sum::<i64>();
    if excess < 0 || excess % np != 0 {
        return Ok(0);
    }
    let pad = excess / np;
    let outer: Vec<i64> = lz.iter().map(|&p| p + pad).collect();
    if lx.iter().zip(&outer).any(|(a, b)| a > b) {
        return Ok(0);
    }
    let content: Vec<i64> = ly.iter().copied().filter(|&p| p > 0).collect();
    Ok(lr_fillings(&outer, &lx, &content))
}

/// `N * (x, y)` for the standard W-invariant form, via lambda-lifts; exact
/// in integers and invariant under lift shifts.
fn form(a: &[i64], b: &[i64]) -> i64 {
    let np = a.len() as i64;
    let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    np * dot - sa * sb
}

fn lift(w: &Weight) -> Vec<i64> {
    w.lambda_lift()
}

/// Positive roots in fundamental coordinates.
fn positive_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=(n + 1) {
            // e_i - e_j as a weight: lambda-lift has 1 in rows i..j-1
            let mut coords = vec![0i64; n];
            for k in i..j {
                // alpha_k = 2x_k - x_{k-1} - x_{k+1}
                coords[k - 1] += 2;
                if k >= 2 {
                    coords[k - 2] -= 1;
                }
                if k < n {
                    coords[k] -= 1;
                }
            }
            out.push(Weight::new(coords));
        }
    }
    out
}

/// Dominance test `mu <= lam` in the root order (prefix sums of the lifts,
/// with lattice classes already matched).
fn dominated(lam: &[i64], mu: &[i64]) -> bool {
    let np = lam.len() as i64;
    let diff: i64 = lam.iter().sum::<i64>() - mu.iter().sum::<i64>();
    if diff % np != 0 {
        return false;
    }
    let shift = diff / np;
    let mut prefix = 0i64;
    for i in 0..lam.len() {
        prefix += lam[i] - (mu[i] + shift);
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

/// All weight multiplicities of `V(hw)` at dominant weights, by
/// Freudenthal's recursion.
fn dominant_multiplicities(hw: &DominantWeight) -> BTreeMap<Vec<i64>, u64> {
    let n = hw.rank();
    let lam = hw.partition();
    let roots = positive_roots(n);
    let rho: Vec<i64> = lift(&Weight::rho(n));
    let lam_rho: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let norm_top = form(&lam_rho, &lam_rho);

    // enumerate dominant weights below hw: partitions nu with
    // |nu| = |lam| - k(n+1) and nu dominated by lam
    let size = lam.iter().sum::<i64>();
    let mut levels: Vec<Vec<i64>> = Vec::new();
    let mut stack = vec![(Vec::<i64>::new(), size)];
    // generate weakly decreasing sequences of length n+1 with last >= 0 and
    // total <= |lam|, total congruent mod n+1
    fn gen(
        acc: &mut Vec<i64>,
        rows: usize,
        maxpart: i64,
        target_mod: i64,
        np: i64,
        lam: &[i64],
        out: &mut Vec<Vec<i64>>,
    ) {
        if acc.len() == rows {
            let tot: i64 = acc.iter().sum();
            if tot % np == target_mod && dominated(lam, acc) {
                out.push(acc.clone());
            }
            return;
        }
        for p in (0..=maxpart).rev() {
            acc.push(p);
            gen(acc, rows, p, target_mod, np, lam, out);
            acc.pop();
        }
    }
    stack.clear();
    let np = (n + 1) as i64;
    gen(&mut Vec::new(), n + 1, size, size.rem_euclid(np), np, &lam, &mut levels);

    // Freudenthal, highest weights first
    levels.sort_by_key(|nu| std::cmp::Reverse(form(nu, &rho)));
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    // lookup that dominantizes (sorts the lift descending) and normalizes
    // the shift
    let canon = |v: &[i64]| -> Vec<i64> {
        let mut s = v.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let last = s[s.len() - 1];
        for x in s.iter_mut() {
            *x -= last;
        }
        s
    };
    let norm_levels: std::collections::BTreeSet<Vec<i64>> =
        levels.iter().map(|v| canon(v)).collect();
    for nu in &levels {
        let nu_rho: Vec<i64> = nu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denom = norm_top - form(&nu_rho, &nu_rho);
        if denom == 0 {
            mult.insert(canon(nu), 1);
            continue;
        }
        let mut rhs: i64 = 0;
        for alpha in &roots {
            let al = lift(&alpha.clone());
            let mut k = 1i64;
            loop {
                let shifted: Vec<i64> = nu.iter().zip(&al).map(|(a, b)| a + k * b).collect();
                let key = canon(&shifted);
                if !norm_levels.contains(&key) {
                    break;
                }
                let m = *mult.get(&key).expect("higher weights processed first") as i64;
                if m > 0 {
                    rhs += 2 * m * form(&shifted, &al);
                }
                k += 1;
            }
        }
        assert!(rhs >= 0 && rhs % denom == 0, "Freudenthal division must be exact");
        let m = (rhs / denom) as u64;
        if m > 0 {
            mult.insert(canon(nu), m);
        }
    }
    mult
}

/// `dim V(hw)_wt` by Freudenthal's recursion with exact integers.
pub fn weight_multiplicity(hw: &DominantWeight, wt: &Weight) -> u64 {
    assert_eq!(hw.rank(), wt.rank(), "rank mismatch");
    let table = dominant_multiplicities(hw);
    let mut s = wt.lambda_lift();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let last = s[s.len() - 1];
    for x in s.iter_mut() {
        *x -= last;
    }
    table.get(&s).copied().unwrap_or(0)
}

/// Full weight system of `V(hw)` in fundamental coordinates.
pub fn weights_of(hw: &DominantWeight) -> BTreeMap<Weight, u64> {
    let n = hw.rank();
    let table = dominant_multiplicities(hw);
    let mut out = BTreeMap::new();
    for (nu, m) in &table {
        // expand the orbit: all distinct permutations of the lift
        let mut sorted = nu.clone();
        sorted.sort_unstable();
        let mut perms = std::collections::BTreeSet::new();
        permute_distinct(&mut sorted, 0, &mut perms);
        for p in perms {
            let coords: Vec<i64> = (0..n).map(|i| p[i] - p[i + 1]).collect();
            out.insert(Weight::new(coords), *m);
        }
    }
    out
}

fn permute_distinct(v: &mut Vec<i64>, start: usize, out: &mut std::collections::BTreeSet<Vec<i64>>) {
    if start == v.len() {
        out.insert(v.clone());
        return;
    }
    let mut seen = std::collections::BTreeSet::new();
    for i in start..v.len() {
        if !seen.insert(v[i]) {
            continue;
        }
        v.swap(start, i);
        permute_distinct(v, start + 1, out);
        v.swap(start, i);
    }
}

/// Weyl dimension formula, exact (u128 accumulator with stepwise gcd).
pub fn weyl_dim(hw: &DominantWeight) -> Result<u64> {
    let n = hw.rank();
    let lam = hw.partition();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..=(n + 1) {
        for j in (i + 1)..=(n + 1) {
            let a = (lam[i - 1] - lam[j - 1] + (j as i64 - i as i64)) as u128;
            let b = (j - i) as u128;
            num = num.checked_mul(a).ok_or_else(|| {
                KlError::ResourceLimit("Weyl dimension overflow".into())
            })?;
            den = den.checked_mul(b).unwrap();
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    assert_eq!(den, 1, "Weyl dimension must be an integer");
    u64::try_from(num).map_err(|_| KlError::ResourceLimit("Weyl dimension overflow".into()))
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Independent tensor-decomposition oracle: multiply the two characters as
/// exact Laurent polynomials on the weight lattice, then strip highest
/// weights. Must agree with [`tensor_mult`] entrywise.
pub fn char_oracle(
    x: &DominantWeight,
    y: &DominantWeight,
) -> Result<BTreeMap<DominantWeight, u64>> {
    let n = x.rank();
    if y.rank() != n {
        return Err(KlError::RankMismatch(n, y.rank()));
    }
    if n > 3 {
        return Err(KlError::OracleBudget("character oracle runs at n <= 3".into()));
    }
    let dx = weyl_dim(x)?;
    let dy = weyl_dim(y)?;
    if dx.saturating_mul(dy) > 1_000_000 {
        return Err(KlError::OracleBudget(format!(
            "character product dimension {} too large",
            dx.saturating_mul(dy)
        )));
    }
    let cx = weights_of(x);
    let cy = weights_of(y);
    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w1, m1) in &cx {
        for (w2, m2) in &cy {
            *product.entry(w1.add(w2)).or_insert(0) += (*m1 as i64) * (*m2 as i64);
        }
    }
    let rho = Weight::rho(n);
    let mut out = BTreeMap::new();
    loop {
        product.retain(|_, m| *m != 0);
        // the weight of maximal height is a highest weight of the remainder
        let top = product
            .iter()
            .max_by_key(|(w, _)| {
                let l = lift(w);
                (form(&l, &lift(&rho)), l)
            })
            .map(|(w, m)| (w.clone(), *m));
        let Some((top, mult)) = top else { break };
        assert!(top.is_dominant(), "maximal remainder weight must be dominant");
        assert!(mult > 0, "negative multiplicity while stripping characters");
        let hw = DominantWeight::new(top.coords().to_vec())?;
        for (w, m) in weights_of(&hw) {
            *product.entry(w).or_insert(0) -= mult * m as i64;
        }
        out.insert(hw, mult as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(&DominantWeight::zero(2)).unwrap(), 1);
        assert_eq!(weyl_dim(&DominantWeight::fundamental(2, 1)).unwrap(), 3);
        for n in 2..=8 {
            let adj = DominantWeight::adjoint(n);
            assert_eq!(weyl_dim(&adj).unwrap() as usize, (n + 1) * (n + 1) - 1);
        }
    }

    #[test]
    fn trivial_tensor_rules() {
        let zero = DominantWeight::zero(3);
        let x = DominantWeight::new(vec![1, 0, 2]).unwrap();
        let other = DominantWeight::new(vec![0, 1, 2]).unwrap();
        assert_eq!(tensor_mult(&zero, &x, &x).unwrap(), 1);
        assert_eq!(tensor_mult(&zero, &x, &other).unwrap(), 0);
    }

    #[test]
    fn adjoint_zero_weight_space() {
        for n in 2..=5 {
            let adj = DominantWeight::adjoint(n);
            assert_eq!(weight_multiplicity(&adj, &Weight::zero(n)), n as u64);
            assert_eq!(weight_multiplicity(&adj, &adj.weight()), 1);
        }
    }

    #[test]
    fn adjoint_root_space() {
        // adjoint weight minus a simple root is a root: multiplicity 1
        let adj = DominantWeight::adjoint(2);
        let alpha1 = Weight::new(vec![2, -1]);
        let wt = adj.weight().add(&alpha1.neg());
        assert_eq!(weight_multiplicity(&adj, &wt), 1);
    }

    #[test]
    fn rank1_clebsch_gordan() {
        let v = DominantWeight::fundamental(1, 1);
        let dec = char_oracle(&v, &v).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert(DominantWeight::new(vec![2]).unwrap(), 1);
        expect.insert(DominantWeight::zero(1), 1);
        assert_eq!(dec, expect);
    }

    #[test]
    fn char_oracle_identity() {
        let y = DominantWeight::new(vec![1, 1]).unwrap();
        let dec = char_oracle(&DominantWeight::zero(2), &y).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[&y], 1);
    }

    #[test]
    fn vector_times_covector_contains_trivial_once() {
        let x1 = DominantWeight::fundamental(2, 1);
        let x2 = DominantWeight::fundamental(2, 2);
        assert_eq!(tensor_mult(&x1, &x2, &DominantWeight::zero(2)).unwrap(), 1);
    }

    #[test]
    fn sum_of_weight_multiplicities_is_dim() {
        for n in 1..=4 {
            for coords in crate::kl::dominant_weights_of_translation_length(n, 0)
                .into_iter()
                .chain((0..=24).flat_map(move |l| {
                    crate::kl::dominant_weights_of_translation_length(n, l)
                }))
                .filter(|w| w.coords().iter().sum::<i64>() <= 4)
                .take(40)
            {
                let hw = DominantWeight::new(coords.coords().to_vec()).unwrap();
                let total: u64 = weights_of(&hw).values().sum();
                assert_eq!(total, weyl_dim(&hw).unwrap(), "hw = {:?}", hw);
            }
        }
    }
}
