//! Exact linear algebra over the rationals: nullspaces, linear solves and a
//! positive-semidefiniteness test that returns a negative vector on failure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of {x : A x = 0}, one vector per free column.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let pivots = rref(&mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a, ncols).len()
}

/// Solves A x = b for square nonsingular A.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() != n {
        return Err(Error::Inconsistent("singular system".into()));
    }
    Ok(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// xᵀ M x.
pub fn quad_form(m: &[Vec<Rational>], x: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (i, row) in m.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut acc = Rational::zero();
        for (j, v) in row.iter().enumerate() {
            if !x[j].is_zero() && !v.is_zero() {
                acc += v * &x[j];
            }
        }
        total += &x[i] * acc;
    }
    total
}

pub fn mat_vec(m: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(x).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsdResult {
    pub psd: bool,
    /// Integer vector x with xᵀ M x < 0 whenever `psd` is false.
    pub witness: Option<Vec<Rational>>,
}

impl PsdResult {
    fn yes() -> Self {
        Self {
            psd: true,
            witness: None,
        }
    }
    fn no(w: Vec<Rational>) -> Self {
        Self {
            psd: false,
            witness: Some(w),
        }
    }
}

pub fn check_symmetric(m: &[Vec<Rational>]) -> Result<()> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape {
                expected: format!("{n} columns"),
                got: format!("{} in row {i}", row.len()),
            });
        }
        for j in 0..i {
            if row[j] != m[j][i] {
                return Err(Error::Asymmetric(i, j));
            }
        }
    }
    Ok(())
}

/// Exact PSD test.
///
/// Looks first for a negative diagonal entry or a 2×2 principal block that
/// fails, then runs fraction-free symmetric elimination over the integers,
/// pivoting on positive diagonal entries only. A failure in the Schur
/// complement is lifted back to the original coordinates.
pub fn psd_exact(m: &[Vec<Rational>]) -> Result<PsdResult> {
    check_symmetric(m)?;
    let n = m.len();
    if let Some(w) = simple_witness(m) {
        return Ok(PsdResult::no(integerize(w)));
    }

    // Clear denominators with a positive scale.
    let mut lcm = BigInt::one();
    for row in m {
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect())
        .collect();

    let mut active: Vec<bool> = vec![true; n];
    let mut eliminated: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    loop {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if live.is_empty() {
            return Ok(PsdResult::yes());
        }
        // Schur-complement entries are det(A11)/prev-scaled but share sign with the true ones.
        if let Some(y) = schur_witness(&a, &live) {
            let x = lift(m, &eliminated, &live, &y)?;
            debug_assert!(quad_form(m, &x).is_negative());
            return Ok(PsdResult::no(integerize(x)));
        }
        let Some(&k) = live.iter().find(|&&i| a[i][i].is_positive()) else {
            return Ok(PsdResult::yes());
        };
        let piv = a[k][k].clone();
        for &i in &live {
            if i == k {
                continue;
            }
            for &j in &live {
                if j == k {
                    continue;
                }
                let v = (&piv * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = piv;
        active[k] = false;
        eliminated.push(k);
    }
}

fn simple_witness(m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = m.len();
    for i in 0..n {
        if m[i][i].is_negative() {
            let mut w = vec![Rational::zero(); n];
            w[i] = Rational::one();
            return Some(w);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let off = &m[i][j];
            if off.is_zero() {
                continue;
            }
            let two = Rational::from_integer(2.into());
            if &m[i][i] + &m[j][j] < two * off.abs() {
                let mut w = vec![Rational::zero(); n];
                w[i] = Rational::one();
                w[j] = if off.is_positive() { -Rational::one() } else { Rational::one() };
                return Some(w);
            }
        }
    }
    None
}

/// A vector y on `live` with yᵀ S y < 0, if the diagonal pattern exposes one.
fn schur_witness(s: &[Vec<BigInt>], live: &[usize]) -> Option<Vec<(usize, Rational)>> {
    for &i in live {
        if s[i][i].is_negative() {
            return Some(vec![(i, Rational::one())]);
        }
    }
    for &i in live {
        if !s[i][i].is_zero() {
            continue;
        }
        for &j in live {
            if j == i || s[i][j].is_zero() {
                continue;
            }
            // y = c e_i + e_j gives 2c s_ij + s_jj; pick c so this is −2|s_ij|.
            let sij = Rational::from_integer(s[i][j].clone());
            let sjj = Rational::from_integer(s[j][j].clone());
            let two = Rational::from_integer(2.into());
            let sign = if sij.is_positive() { -Rational::one() } else { Rational::one() };
            let c = sign * (sjj / (&two * sij.abs()) + Rational::one());
            return Some(vec![(i, c), (j, Rational::one())]);
        }
    }
    None
}

fn lift(m: &[Vec<Rational>], elim: &[usize], live: &[usize], y: &[(usize, Rational)]) -> Result<Vec<Rational>> {
    let n = m.len();
    let mut x = vec![Rational::zero(); n];
    for (i, c) in y {
        x[*i] = c.clone();
    }
    let _ = live;
    if !elim.is_empty() {
        let a11: Vec<Vec<Rational>> = elim.iter().map(|&r| elim.iter().map(|&c| m[r][c].clone()).collect()).collect();
        let rhs: Vec<Rational> = elim
            .iter()
            .map(|&r| y.iter().map(|(j, c)| &m[r][*j] * c).sum())
            .collect();
        let z = solve(&a11, &rhs)?;
        for (k, &r) in elim.iter().enumerate() {
            x[r] = -z[k].clone();
        }
    }
    Ok(x)
}

/// Scales a rational vector to a primitive integer vector.
pub fn integerize(v: Vec<Rational>) -> Vec<Rational> {
    let mut l = BigInt::one();
    for x in &v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}
