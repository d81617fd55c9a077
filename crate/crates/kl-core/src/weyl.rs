//! The extended affine Weyl group of type A in window notation.
//!
//! An element is a bijection `s: Z -> Z` with `s(i + N) = s(i) + N`, stored
//! by its window `[s(1), ..., s(N)]` where `N = n + 1`. The central shift
//! `i -> i + N` is quotiented out by normalizing `sum(s(i) - i) = k*N` into
//! `0 <= k <= N-1`; `k` is the omega-component of the element. Products are
//! function compositions: `(a*b)(i) = a(b(i))`, so words evaluate left to
//! right.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{KlError, Result};

/// Root datum for type `A_n`: rank `n`, period `N = n + 1`, simple roots
/// indexed `1..=n`, affine simple reflections indexed `0..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    n: usize,
}

impl RootDatum {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(KlError::Parse("rank must be at least 1".into()));
        }
        Ok(RootDatum { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> usize {
        self.n + 1
    }

    pub fn identity(&self) -> ExtAffElem {
        ExtAffElem::normalized((1..=self.period() as i64).collect())
    }

    /// The length-zero generator of the cyclic component group, `i -> i + 1`.
    pub fn omega(&self) -> ExtAffElem {
        ExtAffElem::normalized((2..=self.period() as i64 + 1).collect())
    }

    pub fn omega_pow(&self, k: i64) -> ExtAffElem {
        let n = self.period() as i64;
        ExtAffElem::normalized((1..=n).map(|i| i + k).collect())
    }

    /// Affine simple reflection `s_i`, `0 <= i <= n`; swaps the residue
    /// classes of `i` and `i + 1` mod `N`.
    pub fn simple(&self, i: usize) -> ExtAffElem {
        let np = self.period();
        assert!(i <= self.n, "simple reflection index out of range");
        let mut win: Vec<i64> = (1..=np as i64).collect();
        if i >= 1 {
            win.swap(i - 1, i);
        } else {
            win[0] = 0;
            win[np - 1] = np as i64 + 1;
        }
        ExtAffElem::normalized(win)
    }

    /// Longest element of the finite Weyl group `W0`.
    pub fn w0(&self) -> ExtAffElem {
        ExtAffElem::normalized((1..=self.period() as i64).rev().collect())
    }

    /// Translation by a weight. Dominant weights give elements with
    /// `l(t_x w0) = l(t_x) + l(w0)`.
    pub fn translation(&self, x: &Weight) -> ExtAffElem {
        assert_eq!(x.rank(), self.n, "weight rank mismatch");
        let np = self.period() as i64;
        let lam = x.lambda_lift();
        let win = (0..self.period())
            .map(|i| {
                let shift = lam[i].checked_mul(np).expect("window overflow");
                (i as i64 + 1).checked_sub(shift).expect("window overflow")
            })
            .collect();
        ExtAffElem::normalized(win)
    }

    pub fn fundamental_translation(&self, i: usize) -> ExtAffElem {
        self.translation(&Weight::fundamental(self.n, i))
    }

    /// All `(n+1)!` elements of `W0`, as windows.
    pub fn finite_elements(&self) -> Vec<ExtAffElem> {
        (1..=self.period() as i64)
            .permutations(self.period())
            .map(ExtAffElem::normalized)
            .collect()
    }

    pub fn from_word(&self, expr: &WordExpr) -> ExtAffElem {
        let mut acc = self.identity();
        for tok in &expr.tokens {
            let e = match tok {
                Token::Simple(i) => self.simple(*i),
                Token::Omega => self.omega(),
                Token::OmegaInv => self.omega().inverse(),
                Token::W0 => self.w0(),
                Token::Fundamental(i) => self.fundamental_translation(*i),
                Token::Translation(coords) => self.translation(&Weight::new(coords.clone())),
            };
            acc = acc.multiply(&e);
        }
        acc
    }

    pub fn parse_word(&self, input: &str) -> Result<ExtAffElem> {
        Ok(self.from_word(&WordExpr::parse(input, self.n)?))
    }
}

/// Weight in the fundamental-weight basis; coordinates may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![0; n] }
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "fundamental weight index out of range");
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        Weight { coords }
    }

    /// Sum of all fundamental weights.
    pub fn rho(n: usize) -> Self {
        Weight { coords: vec![1; n] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.checked_add(*b).expect("weight overflow"))
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|&c| -c).collect() }
    }

    /// `x* = -w0(x)`: coordinate reversal in type A.
    pub fn dual(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.reverse();
        Weight { coords }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Pairing with the simple coroot `alpha_i^\vee`.
    pub fn pairing_simple(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    /// Pairing with the coroot of the positive root `e_i - e_j`, `i < j`.
    pub fn pairing_root(&self, i: usize, j: usize) -> i64 {
        let lam = self.lambda_lift();
        lam[i - 1] - lam[j - 1]
    }

    /// Partition-style lift to `Z^N`: `lam_i = a_i + ... + a_n`, `lam_N = 0`.
    pub fn lambda_lift(&self) -> Vec<i64> {
        let n = self.rank();
        let mut lam = vec![0i64; n + 1];
        for i in (0..n).rev() {
            lam[i] = lam[i + 1].checked_add(self.coords[i]).expect("weight overflow");
        }
        lam
    }

    /// `l(t_x) = sum over positive roots of |<x, alpha^vee>|` evaluates to
    /// `sum_i a_i * i * (N - i)` for dominant `x`.
    pub fn translation_length(&self) -> i64 {
        let np = self.rank() as i64 + 1;
        let mut tot = 0i64;
        for i in 1..np {
            for j in (i + 1)..=np {
                let lam = self.lambda_lift();
                tot += (lam[(i - 1) as usize] - lam[(j - 1) as usize]).abs();
            }
        }
        tot
    }

    /// Class of the weight in `X / Q = Z/N`.
    pub fn lattice_class(&self) -> usize {
        let np = self.rank() as i64 + 1;
        let s: i64 = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as i64 + 1) * a)
            .sum();
        s.rem_euclid(np) as usize
    }
}

/// Side selector for descent sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Element of the extended affine Weyl group, as a normalized window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtAffElem {
    window: Vec<i64>,
}

impl ExtAffElem {
    /// Build from an arbitrary window, normalizing the central shift.
    pub fn normalized(mut window: Vec<i64>) -> Self {
        let np = window.len() as i64;
        assert!(np >= 2, "window must have at least two entries");
        debug_assert!(
            {
                let mut residues: Vec<i64> = window.iter().map(|w| w.rem_euclid(np)).collect();
                residues.sort_unstable();
                residues == (0..np).collect::<Vec<_>>()
            },
            "window entries must be pairwise incongruent mod N: {:?}",
            window
        );
        let disp: i64 = window.iter().enumerate().map(|(i, w)| w - (i as i64 + 1)).sum();
        debug_assert_eq!(disp.rem_euclid(np), 0);
        let k = disp / np;
        let m = k.div_euclid(np);
        if m != 0 {
            for w in window.iter_mut() {
                *w -= np * m;
            }
        }
        ExtAffElem { window }
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn rank(&self) -> usize {
        self.window.len() - 1
    }

    pub fn period(&self) -> usize {
        self.window.len()
    }

    /// The component `k` of the element in the cyclic quotient `<omega>`.
    pub fn omega_component(&self) -> usize {
        let np = self.window.len() as i64;
        let disp: i64 = self.window.iter().enumerate().map(|(i, w)| w - (i as i64 + 1)).sum();
        (disp / np) as usize
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    /// True when the element lies in `W0` (window is a permutation of
    /// `1..=N`).
    pub fn is_finite(&self) -> bool {
        self.window.iter().all(|&w| w >= 1 && w <= self.window.len() as i64)
    }

    /// Evaluate the underlying bijection of `Z` at any integer.
    pub fn apply(&self, j: i64) -> i64 {
        let np = self.window.len() as i64;
        let r = (j - 1).rem_euclid(np) + 1;
        let t = (j - r) / np;
        self.window[(r - 1) as usize] + np * t
    }

    /// Group product `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &ExtAffElem) -> ExtAffElem {
        assert_eq!(self.period(), other.period(), "rank mismatch");
        let win = (1..=self.window.len() as i64)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        ExtAffElem::normalized(win)
    }

    pub fn inverse(&self) -> ExtAffElem {
        let np = self.window.len() as i64;
        let mut win = vec![0i64; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(np) + 1;
            let t = (v - r) / np;
            win[(r - 1) as usize] = i as i64 + 1 - np * t;
        }
        ExtAffElem::normalized(win)
    }

    /// Coxeter length: `sum_{i<j} |floor((s(j) - s(i)) / N)|`.
    pub fn length(&self) -> usize {
        let np = self.window.len() as i64;
        let mut tot = 0i64;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                tot += (self.window[j] - self.window[i]).div_euclid(np).abs();
            }
        }
        tot as usize
    }

    /// Left product by the simple reflection `s_i` (values pass through
    /// `s_i`).
    pub fn mul_simple_left(&self, i: usize) -> ExtAffElem {
        let np = self.window.len() as i64;
        let a = i as i64 % np;
        let b = (i as i64 + 1) % np;
        let win = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(np);
                if r == a {
                    v + 1
                } else if r == b {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        ExtAffElem::normalized(win)
    }

    /// Right product by the simple reflection `s_i` (positions swap).
    pub fn mul_simple_right(&self, i: usize) -> ExtAffElem {
        let np = self.window.len();
        let mut win = self.window.clone();
        if i >= 1 {
            win.swap(i - 1, i);
        } else {
            win[0] = self.window[np - 1] - np as i64;
            win[np - 1] = self.window[0] + np as i64;
        }
        ExtAffElem::normalized(win)
    }

    /// `i` is a right descent iff `l(w s_i) < l(w)`.
    pub fn right_descent(&self, i: usize) -> bool {
        let np = self.window.len();
        if i >= 1 {
            self.window[i - 1] > self.window[i]
        } else {
            self.window[np - 1] - np as i64 > self.window[0]
        }
    }

    pub fn left_descent(&self, i: usize) -> bool {
        // i is a left descent iff some m = i mod N appears later in the
        // extended window than m+1; equivalently position(i+1) < position(i)
        // where position(v) = s^{-1}(v).
        self.inverse().right_descent(i)
    }

    pub fn descents(&self, side: Side) -> Vec<usize> {
        let w = match side {
            Side::Right => self.clone(),
            Side::Left => self.inverse(),
        };
        (0..w.window.len()).filter(|&i| w.right_descent(i)).collect()
    }

    pub fn min_left_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (0..self.window.len()).find(|&i| inv.right_descent(i))
    }

    /// Bruhat order. Elements in different omega-components are
    /// incomparable; within a component the affine Weyl group order is
    /// decided by the descent-lifting recursion.
    pub fn bruhat_leq(&self, w: &ExtAffElem) -> bool {
        assert_eq!(self.period(), w.period(), "rank mismatch");
        if self.omega_component() != w.omega_component() {
            return false;
        }
        let mut y = self.clone();
        let mut w = w.clone();
        loop {
            if y == w {
                return true;
            }
            let (ly, lw) = (y.length(), w.length());
            if ly >= lw {
                return false;
            }
            let s = w.min_left_descent().expect("w has positive length");
            let sy = y.mul_simple_left(s);
            if sy.length() < ly {
                y = sy;
            }
            w = w.mul_simple_left(s);
        }
    }

    /// Decompose as `omega^k * s_{i_1} ... s_{i_m}` with `m = l(w)`,
    /// extracting the smallest-index left descent first.
    pub fn reduced_word(&self) -> (usize, Vec<usize>) {
        let k = self.omega_component();
        let datum = RootDatum { n: self.rank() };
        let mut u = datum.omega_pow(-(k as i64)).multiply(self);
        debug_assert_eq!(u.omega_component(), 0);
        let mut word = Vec::with_capacity(u.length());
        while !u.is_identity() {
            let s = u.min_left_descent().expect("non-identity has a descent");
            word.push(s);
            u = u.mul_simple_left(s);
        }
        (k, word)
    }

    /// If the element is a translation `t_x`, recover `x`.
    pub fn as_translation(&self) -> Option<Weight> {
        let np = self.window.len() as i64;
        let mut lam = Vec::with_capacity(self.window.len());
        for (i, &v) in self.window.iter().enumerate() {
            let d = (i as i64 + 1) - v;
            if d.rem_euclid(np) != 0 {
                return None;
            }
            lam.push(d / np);
        }
        let coords = (0..self.rank()).map(|i| lam[i] - lam[i + 1]).collect();
        Some(Weight::new(coords))
    }
}

impl fmt::Display for ExtAffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().map(|w| w.to_string()).join(","))
    }
}

/// Evaluate the length formula
/// `l(t_x w) = sum_{a>0, w(a)<0} |<x,a^vee>+1| + sum_{a>0, w(a)>0} |<x,a^vee>|`
/// for `w` in the finite Weyl group.
pub fn length_im(x: &Weight, w: &ExtAffElem) -> Result<usize> {
    if !w.is_finite() {
        return Err(KlError::NotFinite);
    }
    let np = w.period();
    let lam = x.lambda_lift();
    let mut tot: i64 = 0;
    for i in 1..=np {
        for j in (i + 1)..=np {
            let pairing = lam[i - 1] - lam[j - 1];
            if w.window()[i - 1] > w.window()[j - 1] {
                tot += (pairing + 1).abs();
            } else {
                tot += pairing.abs();
            }
        }
    }
    Ok(tot as usize)
}

/// Word token in the element input syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Simple(usize),
    Omega,
    OmegaInv,
    W0,
    Fundamental(usize),
    Translation(Vec<i64>),
}

/// A parsed word over the generators; evaluation is a homomorphism from free
/// words to the group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordExpr {
    pub tokens: Vec<Token>,
}

impl WordExpr {
    pub fn new(tokens: Vec<Token>) -> Self {
        WordExpr { tokens }
    }

    /// Parse whitespace-separated tokens: `0`..`n` for `s_i`, `w` for omega,
    /// `w^-1`, `w0`, `x1`..`xn`, and `t[a1,...,an]`.
    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let mut tokens = Vec::new();
        for raw in input.split_whitespace() {
            let tok = if raw == "w" {
                Token::Omega
            } else if raw == "w^-1" {
                Token::OmegaInv
            } else if raw == "w0" {
                Token::W0
            } else if let Some(rest) = raw.strip_prefix('x') {
                let i: usize = rest
                    .parse()
                    .map_err(|_| KlError::Parse(format!("malformed token `{}`", raw)))?;
                if i < 1 || i > n {
                    return Err(KlError::Parse(format!(
                        "fundamental weight index {} out of range 1..={}",
                        i, n
                    )));
                }
                Token::Fundamental(i)
            } else if let Some(rest) = raw.strip_prefix("t[") {
                let inner = rest
                    .strip_suffix(']')
                    .ok_or_else(|| KlError::Parse(format!("malformed token `{}`", raw)))?;
                let coords: Vec<i64> = inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|_| KlError::Parse(format!("malformed token `{}`", raw)))
                    })
                    .collect::<Result<_>>()?;
                if coords.len() != n {
                    return Err(KlError::Parse(format!(
                        "translation needs {} coordinates, got {}",
                        n,
                        coords.len()
                    )));
                }
                Token::Translation(coords)
            } else {
                let i: usize = raw
                    .parse()
                    .map_err(|_| KlError::Parse(format!("malformed token `{}`", raw)))?;
                if i > n {
                    return Err(KlError::Parse(format!(
                        "generator index {} out of range 0..={}",
                        i, n
                    )));
                }
                Token::Simple(i)
            };
            tokens.push(tok);
        }
        Ok(WordExpr { tokens })
    }
}

/// Subword-property Bruhat oracle: dynamic programming over one reduced word
/// of `w`. Independent of the descent-lifting recursion; used for
/// cross-checks.
pub fn bruhat_leq_subword(y: &ExtAffElem, w: &ExtAffElem) -> bool {
    if y.omega_component() != w.omega_component() {
        return false;
    }
    let datum = RootDatum { n: w.rank() };
    let (k, word) = w.reduced_word();
    let target = datum.omega_pow(-(k as i64)).multiply(y);
    let mut reachable = std::collections::BTreeSet::new();
    reachable.insert(datum.identity());
    for &s in &word {
        let mut next = reachable.clone();
        for e in &reachable {
            next.insert(e.mul_simple_right(s));
        }
        reachable = next;
    }
    reachable.contains(&target)
}

/// All `z <= w` in the same omega-component, by subword dynamic programming.
pub fn bruhat_interval_below(w: &ExtAffElem) -> Vec<ExtAffElem> {
    let datum = RootDatum { n: w.rank() };
    let (k, word) = w.reduced_word();
    let om = datum.omega_pow(k as i64);
    let mut reachable = std::collections::BTreeSet::new();
    reachable.insert(datum.identity());
    for &s in &word {
        let mut next = reachable.clone();
        for e in &reachable {
            next.insert(e.mul_simple_right(s));
        }
        reachable = next;
    }
    reachable.into_iter().map(|e| om.multiply(&e)).collect()
}
