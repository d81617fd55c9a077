//! Constructors for the named elements used by the verification scenarios.
//! Everything is built programmatically from the rank; nothing is
//! hard-coded per rank.

use kl_core::{ExtAffElem, RootDatum, Weight};

/// Reduced word of `v`: `s_1 s_n s_0 s_2 s_3 ... s_{n-2} s_{n-1} s_{n-2}
/// ... s_2 s_1 s_n s_0`, of length `2n + 1`. Needs `n >= 4`.
pub fn v_word(n: usize) -> Vec<usize> {
    assert!(n >= 4, "v is defined for n >= 4");
    let mut w = vec![1, n, 0];
    w.extend(2..=n - 2);
    w.push(n - 1);
    w.extend((2..=n - 2).rev());
    w.extend([1, n, 0]);
    w
}

pub fn v_elem(datum: &RootDatum) -> ExtAffElem {
    from_indices(datum, &v_word(datum.rank()))
}

/// `z_i = s_0 s_i s_{i-1} ... s_1 s_3 s_4 ... s_n s_0 w_0`, `1 <= i <= n-1`.
pub fn z_elem(datum: &RootDatum, i: usize) -> ExtAffElem {
    let n = datum.rank();
    assert!((1..n).contains(&i));
    let mut w = vec![0];
    w.extend((1..=i).rev());
    w.extend(3..=n);
    w.push(0);
    from_indices(datum, &w).multiply(&datum.w0())
}

/// `u_2 = s_2 s_3 ... s_n s_0 w_0`.
pub fn u2_elem(datum: &RootDatum) -> ExtAffElem {
    u_elem(datum, 2)
}

/// `u_j = s_j s_{j+1} ... s_n s_0 w_0`, `2 <= j <= n`.
pub fn u_elem(datum: &RootDatum, j: usize) -> ExtAffElem {
    let n = datum.rank();
    assert!((2..=n).contains(&j));
    let mut w: Vec<usize> = (j..=n).collect();
    w.push(0);
    from_indices(datum, &w).multiply(&datum.w0())
}

/// `w_i = s_i s_{i-1} ... s_1 s_0 w_0`, `1 <= i <= n-1`.
pub fn w_elem(datum: &RootDatum, i: usize) -> ExtAffElem {
    let n = datum.rank();
    assert!((1..n).contains(&i));
    let mut w: Vec<usize> = (1..=i).rev().collect();
    w.push(0);
    from_indices(datum, &w).multiply(&datum.w0())
}

/// `v_{ij} = s_i ... s_1 s_j s_{j+1} ... s_n s_0 w_0`,
/// `1 <= i <= n-1`, `3 <= j <= n`.
pub fn v_ij_elem(datum: &RootDatum, i: usize, j: usize) -> ExtAffElem {
    let n = datum.rank();
    assert!((1..n).contains(&i) && (3..=n).contains(&j));
    let mut w: Vec<usize> = (1..=i).rev().collect();
    w.extend(j..=n);
    w.push(0);
    from_indices(datum, &w).multiply(&datum.w0())
}

/// `u_{ij} = s_0 v_{ij}`.
pub fn u_ij_elem(datum: &RootDatum, i: usize, j: usize) -> ExtAffElem {
    datum.simple(0).multiply(&v_ij_elem(datum, i, j))
}

/// `w_{ij} = s_n s_0 v_{ij}`.
pub fn w_ij_elem(datum: &RootDatum, i: usize, j: usize) -> ExtAffElem {
    datum
        .simple(datum.rank())
        .multiply(&datum.simple(0))
        .multiply(&v_ij_elem(datum, i, j))
}

/// The finite Weyl element whose `d`-element is `s_0 v`:
/// `s_{n-1} ... s_1 s_n ... s_2 s_4 ... s_n s_3 ... s_{n-1} s_1 s_n`.
pub fn w_of_theorem(datum: &RootDatum) -> ExtAffElem {
    let n = datum.rank();
    assert!(n >= 4);
    let mut w: Vec<usize> = (1..=n - 1).rev().collect();
    w.extend((2..=n).rev());
    w.extend(4..=n);
    w.extend(3..=n - 1);
    w.extend([1, n]);
    from_indices(datum, &w)
}

/// `x_1 x_n`, the translation by the highest root.
pub fn adjoint_translation(datum: &RootDatum) -> ExtAffElem {
    let n = datum.rank();
    let mut coords = vec![0i64; n];
    coords[0] += 1;
    coords[n - 1] += 1;
    datum.translation(&Weight::new(coords))
}

fn from_indices(datum: &RootDatum, word: &[usize]) -> ExtAffElem {
    let mut acc = datum.identity();
    for &i in word {
        acc = acc.multiply(&datum.simple(i));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use kl_core::Side;

    #[test]
    fn v_has_length_2n_plus_1() {
        for n in 4..=6 {
            let datum = RootDatum::new(n).unwrap();
            assert_eq!(v_elem(&datum).length(), 2 * n + 1);
        }
    }

    #[test]
    fn adjoint_translation_has_length_2n() {
        for n in 4..=6 {
            let datum = RootDatum::new(n).unwrap();
            let e = adjoint_translation(&datum);
            assert_eq!(e.length(), 2 * n);
            // same element as the product of the two word forms
            let x1 = datum.fundamental_translation(1);
            let xn = datum.fundamental_translation(n);
            assert_eq!(e, x1.multiply(&xn));
        }
    }

    #[test]
    fn theorem_w_descents() {
        for n in [5usize, 6] {
            let datum = RootDatum::new(n).unwrap();
            let w = w_of_theorem(&datum);
            assert_eq!(w.length(), 4 * n - 6);
            assert_eq!(w.descents(Side::Right), vec![1, 2, n - 1, n]);
        }
        // at n = 4 the descent set is all of {1,2,3,4}, so w = w0
        let datum = RootDatum::new(4).unwrap();
        assert_eq!(w_of_theorem(&datum), datum.w0());
    }

    #[test]
    fn z_lengths() {
        let datum = RootDatum::new(4).unwrap();
        let a = datum.w0().length();
        for i in 1..4 {
            assert_eq!(z_elem(&datum, i).length(), 4 + i + a);
        }
    }
}
