//! Matrix units of gl(m|n), the superbracket, the two star-operations,
//! the τ-isomorphism gl(n|q+p) → gl(p+q|n) and the super Killing form.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::superweights::{Root, Signature};

/// Which superalgebra a matrix unit lives in.
///
/// `Gl` is gl(p+q|n) with the u(p,q|n) star. `Swapped` is gl(n|q+p), whose
/// first n indices are even and whose star sign is −1 on the last p indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Frame {
    Gl(Signature),
    Swapped(Signature),
}

impl Frame {
    pub fn sig(&self) -> Signature {
        match *self {
            Frame::Gl(s) | Frame::Swapped(s) => s,
        }
    }

    pub fn dim(&self) -> usize {
        self.sig().dim()
    }

    pub fn parity(&self, c: usize) -> u8 {
        match *self {
            Frame::Gl(s) => u8::from(c > s.m()),
            Frame::Swapped(s) => u8::from(c > s.n()),
        }
    }

    /// s(c) = −1 iff this returns true.
    pub fn star_negative(&self, c: usize) -> bool {
        match *self {
            Frame::Gl(s) => c <= s.p(),
            Frame::Swapped(s) => c > s.n() + s.q(),
        }
    }

    fn star_sign(&self, a: usize, b: usize) -> i64 {
        if self.star_negative(a) == self.star_negative(b) {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixUnit {
    frame: Frame,
    a: usize,
    b: usize,
}

impl MatrixUnit {
    /// E_ab in gl(p+q|n).
    pub fn new(sig: Signature, a: usize, b: usize) -> Result<Self> {
        Self::in_frame(Frame::Gl(sig), a, b)
    }

    /// Ẽ_ab in gl(n|q+p).
    pub fn swapped(sig: Signature, a: usize, b: usize) -> Result<Self> {
        Self::in_frame(Frame::Swapped(sig), a, b)
    }

    pub fn in_frame(frame: Frame, a: usize, b: usize) -> Result<Self> {
        let d = frame.dim();
        if a == 0 || b == 0 || a > d || b > d {
            return Err(Error::IndexOutOfRange(format!("E[{a},{b}] with m+n = {d}")));
        }
        Ok(Self { frame, a, b })
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }
    pub fn a(&self) -> usize {
        self.a
    }
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn parity(&self) -> u8 {
        (self.frame.parity(self.a) + self.frame.parity(self.b)) % 2
    }

    /// All (m+n)² units of a frame, ordered lexicographically by (a,b).
    pub fn basis(frame: Frame) -> Vec<MatrixUnit> {
        let d = frame.dim();
        (1..=d)
            .flat_map(|a| (1..=d).map(move |b| MatrixUnit { frame, a, b }))
            .collect()
    }
}

impl fmt::Display for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.a, self.b)
    }
}

/// The at most two terms of [E_ab, E_cd] as (row, col, coefficient).
pub fn bracket_terms(frame: Frame, (a, b): (usize, usize), (c, d): (usize, usize)) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::with_capacity(2);
    if b == c {
        out.push((a, d, 1));
    }
    if d == a {
        let px = frame.parity(a) + frame.parity(b);
        let py = frame.parity(c) + frame.parity(d);
        let sign = if (px * py) % 2 == 1 { 1 } else { -1 };
        out.push((c, b, sign));
    }
    // [E_aa, E_aa] style collisions
    if out.len() == 2 && out[0].0 == out[1].0 && out[0].1 == out[1].1 {
        let s = out[0].2 + out[1].2;
        out.clear();
        if s != 0 {
            out.push((a, d, s));
        }
    }
    out
}

/// A finite linear combination of matrix units with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    frame: Frame,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl AlgebraElement {
    pub fn zero(frame: Frame) -> Self {
        Self {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(x: MatrixUnit) -> Self {
        let mut e = Self::zero(x.frame);
        e.add_term(x.a, x.b, Rational::one());
        e
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (MatrixUnit, &Rational)> {
        let frame = self.frame;
        self.terms
            .iter()
            .map(move |(&(a, b), c)| (MatrixUnit { frame, a, b }, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common parity of all terms; zero counts as even.
    pub fn parity(&self) -> Result<u8> {
        let mut it = self.terms.keys().map(|&(a, b)| (self.frame.parity(a) + self.frame.parity(b)) % 2);
        let first = it.next().unwrap_or(0);
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.frame);
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        same_frame(self.frame, other.frame)?;
        let mut out = self.clone();
        for (&(a, b), v) in &other.terms {
            out.add_term(a, b, v.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("{}*E[{a},{b}]", crate::rational::format(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn same_frame(x: Frame, y: Frame) -> Result<()> {
    if x != y {
        return Err(Error::SignatureMismatch {
            left: format!("{x:?}"),
            right: format!("{y:?}"),
        });
    }
    Ok(())
}

/// [E_ab, E_cd] = δ_bc E_ad − (−1)^{([a]+[b])([c]+[d])} δ_da E_cb.
pub fn bracket(x: MatrixUnit, y: MatrixUnit) -> Result<AlgebraElement> {
    same_frame(x.frame, y.frame)?;
    let mut out = AlgebraElement::zero(x.frame);
    for (r, c, k) in bracket_terms(x.frame, (x.a, x.b), (y.a, y.b)) {
        out.add_term(r, c, int(k));
    }
    Ok(out)
}

/// Bilinear extension of [`bracket`].
pub fn bracket_elements(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    same_frame(x.frame, y.frame)?;
    let mut out = AlgebraElement::zero(x.frame);
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            for (r, c, k) in bracket_terms(x.frame, (u.a, u.b), (v.a, v.b)) {
                out.add_term(r, c, cu * cv * int(k));
            }
        }
    }
    Ok(out)
}

/// E_ab* = s(a)s(b) E_ba.
pub fn star(x: MatrixUnit) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.frame);
    out.add_term(x.b, x.a, int(x.frame.star_sign(x.a, x.b)));
    out
}

/// (−1)^{[a]+[b]} E_ab*.
pub fn dual_star(x: MatrixUnit) -> AlgebraElement {
    let sign = if x.parity() == 1 { -1 } else { 1 };
    star(x).scale(&int(sign))
}

/// Star extended to real combinations (anti-linearity is invisible there).
pub fn star_element(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.frame);
    for (u, c) in x.terms() {
        out.add_term(u.b, u.a, c * int(x.frame.star_sign(u.a, u.b)));
    }
    out
}

pub fn dual_star_element(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.frame);
    for (u, c) in x.terms() {
        let sign = x.frame.star_sign(u.a, u.b) * if u.parity() == 1 { -1 } else { 1 };
        out.add_term(u.b, u.a, c * int(sign));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    CompactEven,
    CompactOdd,
    NoncompactEven,
    NoncompactOdd,
}

pub fn root_class(sig: Signature, r: Root) -> Result<RootClass> {
    if !r.is_positive() || r.b > sig.dim() {
        return Err(Error::IndexOutOfRange(format!(
            "ε{}−ε{} is not a positive root",
            r.a, r.b
        )));
    }
    let noncompact = r.a <= sig.p() && r.b > sig.p();
    Ok(match (noncompact, r.parity(sig)) {
        (false, 0) => RootClass::CompactEven,
        (false, _) => RootClass::CompactOdd,
        (true, 0) => RootClass::NoncompactEven,
        (true, _) => RootClass::NoncompactOdd,
    })
}

/// Str(ad x ∘ ad y), summing (−1)^{|z|} times the z-coefficient of [x,[y,z]] over the basis.
pub fn killing(x: MatrixUnit, y: MatrixUnit) -> Result<Rational> {
    same_frame(x.frame, y.frame)?;
    let frame = x.frame;
    let mut total = 0i64;
    for z in MatrixUnit::basis(frame) {
        let sz = if z.parity() == 1 { -1 } else { 1 };
        for (r, c, k1) in bracket_terms(frame, (y.a, y.b), (z.a, z.b)) {
            for (r2, c2, k2) in bracket_terms(frame, (x.a, x.b), (r, c)) {
                if (r2, c2) == (z.a, z.b) {
                    total += sz * k1 * k2;
                }
            }
        }
    }
    Ok(int(total))
}

pub fn killing_elements(x: &AlgebraElement, y: &AlgebraElement) -> Result<Rational> {
    same_frame(x.frame, y.frame)?;
    let mut total = Rational::zero();
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            total += cu * cv * killing(u, v)?;
        }
    }
    Ok(total)
}

/// τ(Ẽ_ab) = E_{ã,b̃} with ã = m+n+1−a.
pub fn tau(x: MatrixUnit) -> Result<MatrixUnit> {
    let sig = match x.frame {
        Frame::Swapped(s) => s,
        Frame::Gl(_) => {
            return Err(Error::IndexOutOfRange(
                "tau expects a gl(n|q+p) matrix unit".into(),
            ))
        }
    };
    let t = sig.dim() + 1;
    MatrixUnit::new(sig, t - x.a, t - x.b)
}

/// Linear extension of [`tau`].
pub fn tau_element(x: &AlgebraElement) -> Result<AlgebraElement> {
    let sig = x.frame.sig();
    let mut out = AlgebraElement::zero(Frame::Gl(sig));
    for (u, c) in x.terms() {
        let v = tau(u)?;
        out.add_term(v.a, v.b, c.clone());
    }
    Ok(out)
}

/// a + b·i over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Gaussian {
    re: Rational,
    im: Rational,
}

impl Gaussian {
    fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }
    fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn real(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }
}

type ComplexElement = Vec<((usize, usize), Gaussian)>;

fn complex_killing(frame: Frame, table: &BTreeMap<((usize, usize), (usize, usize)), Rational>, x: &ComplexElement, y: &ComplexElement) -> Gaussian {
    let _ = frame;
    let mut total = Gaussian::zero();
    for (u, cu) in x {
        for (v, cv) in y {
            let k = table.get(&(*u, *v)).cloned().unwrap_or_else(Rational::zero);
            total = total.add(&cu.mul(cv).mul(&Gaussian::real(k)));
        }
    }
    total
}

fn complex_star(frame: Frame, x: &ComplexElement) -> ComplexElement {
    x.iter()
        .map(|&((a, b), ref c)| ((b, a), c.conj().mul(&Gaussian::real(int(frame.star_sign(a, b))))))
        .collect()
}

fn killing_table(frame: Frame) -> Result<BTreeMap<((usize, usize), (usize, usize)), Rational>> {
    let basis = MatrixUnit::basis(frame);
    let mut table = BTreeMap::new();
    for &x in &basis {
        for &y in &basis {
            let k = killing(x, y)?;
            if !k.is_zero() {
                table.insert(((x.a, x.b), (y.a, y.b)), k);
            }
        }
    }
    Ok(table)
}

/// Whether τ preserves parity, both stars and every bracket of basis units of gl(n|q+p).
pub fn tau_check(sig: Signature) -> bool {
    let basis = MatrixUnit::basis(Frame::Swapped(sig));
    basis.iter().all(|&x| {
        let tx = tau(x).expect("swapped frame");
        x.parity() == tx.parity()
            && tau_element(&star(x)).ok() == Some(star(tx))
            && tau_element(&dual_star(x)).ok() == Some(dual_star(tx))
            && basis.iter().all(|&y| {
                let lhs = tau_element(&bracket(x, y).expect("same frame")).ok();
                lhs == bracket(tx, tau(y).expect("swapped frame")).ok()
            })
    })
}

/// Checks (x*, y*) = (−1)^{[x]} conj((x, y)) on every pair of basis units.
pub fn star_killing_exhaustive(sig: Signature) -> bool {
    let frame = Frame::Gl(sig);
    let basis = MatrixUnit::basis(frame);
    basis.iter().all(|&x| {
        basis.iter().all(|&y| {
            let lhs = killing_elements(&star(x), &star(y)).expect("same frame");
            let sign = if x.parity() == 1 { -1 } else { 1 };
            lhs == killing(x, y).expect("same frame") * int(sign)
        })
    })
}

/// Checks the star/Killing identity on `samples` random homogeneous pairs with
/// Gaussian-rational coefficients, plus the full basis sweep.
pub fn star_killing_check(sig: Signature, samples: usize) -> bool {
    star_killing_check_seeded(sig, samples, 0x5eed_57a2)
}

pub fn star_killing_check_seeded(sig: Signature, samples: usize, seed: u64) -> bool {
    if !star_killing_exhaustive(sig) {
        return false;
    }
    let frame = Frame::Gl(sig);
    let table = match killing_table(frame) {
        Ok(t) => t,
        Err(_) => return false,
    };
    let basis = MatrixUnit::basis(frame);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng, parity: u8| -> ComplexElement {
        let pool: Vec<&MatrixUnit> = basis.iter().filter(|u| u.parity() == parity).collect();
        (0..3)
            .map(|_| {
                let u = pool[rng.gen_range(0..pool.len())];
                let c = Gaussian::new(int(rng.gen_range(-4..=4)), int(rng.gen_range(-4..=4)));
                ((u.a, u.b), c)
            })
            .collect()
    };
    (0..samples).all(|_| {
        let px = rng.gen_range(0..2u8);
        let py = rng.gen_range(0..2u8);
        let x = sample(&mut rng, px);
        let y = sample(&mut rng, py);
        let lhs = complex_killing(frame, &table, &complex_star(frame, &x), &complex_star(frame, &y));
        let mut rhs = complex_killing(frame, &table, &x, &y).conj();
        if px == 1 {
            rhs = rhs.mul(&Gaussian::real(int(-1)));
        }
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize, n: usize) -> Signature {
        Signature::new(p, q, n).unwrap()
    }

    fn e(s: Signature, a: usize, b: usize) -> MatrixUnit {
        MatrixUnit::new(s, a, b).unwrap()
    }

    fn elem(s: Signature, terms: &[(usize, usize, i64)]) -> AlgebraElement {
        let mut out = AlgebraElement::zero(Frame::Gl(s));
        for &(a, b, c) in terms {
            out.add_term(a, b, int(c));
        }
        out
    }

    /// Supermatrix of a unit as a dense integer matrix.
    fn dense(frame: Frame, x: &AlgebraElement) -> Vec<Vec<Rational>> {
        let d = frame.dim();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (u, c) in x.terms() {
            m[u.a() - 1][u.b() - 1] += c;
        }
        m
    }

    fn matmul(x: &[Vec<Rational>], y: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let d = x.len();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| &x[i][k] * &y[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// Matrix super-commutator XY − (−1)^{|X||Y|} YX as an independent oracle.
    fn matrix_bracket(frame: Frame, x: MatrixUnit, y: MatrixUnit) -> AlgebraElement {
        let mx = dense(frame, &AlgebraElement::unit(x));
        let my = dense(frame, &AlgebraElement::unit(y));
        let xy = matmul(&mx, &my);
        let yx = matmul(&my, &mx);
        let sign = if x.parity() * y.parity() == 1 { int(-1) } else { int(1) };
        let mut out = AlgebraElement::zero(frame);
        for i in 0..frame.dim() {
            for j in 0..frame.dim() {
                out.add_term(i + 1, j + 1, &xy[i][j] - &sign * &yx[i][j]);
            }
        }
        out
    }

    #[test]
    fn bracket_examples() {
        let s = sig(1, 1, 1);
        assert_eq!(bracket(e(s, 1, 2), e(s, 2, 1)).unwrap(), elem(s, &[(1, 1, 1), (2, 2, -1)]));
        assert_eq!(bracket(e(s, 1, 3), e(s, 3, 1)).unwrap(), elem(s, &[(1, 1, 1), (3, 3, 1)]));
        assert!(bracket(e(s, 1, 1), e(s, 1, 1)).unwrap().is_zero());
        assert!(bracket(e(s, 1, 1), e(sig(1, 1, 2), 1, 1)).is_err());
    }

    #[test]
    fn bracket_matches_matrix_supercommutator() {
        for s in [sig(1, 1, 1), sig(2, 1, 1), sig(1, 2, 2), sig(2, 0, 2)] {
            for frame in [Frame::Gl(s), Frame::Swapped(s)] {
                let basis = MatrixUnit::basis(frame);
                for &x in &basis {
                    for &y in &basis {
                        assert_eq!(bracket(x, y).unwrap(), matrix_bracket(frame, x, y), "{x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn super_jacobi() {
        let shapes = [(1, 0, 1), (2, 0, 1), (1, 1, 1), (3, 0, 2), (2, 1, 2), (1, 2, 2)];
        for (p, q, n) in shapes {
            let frame = Frame::Gl(sig(p, q, n));
            let basis = MatrixUnit::basis(frame);
            for &x in &basis {
                for &y in &basis {
                    for &z in &basis {
                        let (px, py, pz) = (x.parity(), y.parity(), z.parity());
                        let sgn = |k: u8| if k % 2 == 1 { int(-1) } else { int(1) };
                        let ex = AlgebraElement::unit(x);
                        let ey = AlgebraElement::unit(y);
                        let ez = AlgebraElement::unit(z);
                        let t1 = bracket_elements(&ex, &bracket_elements(&ey, &ez).unwrap()).unwrap();
                        let t2 = bracket_elements(&ey, &bracket_elements(&ez, &ex).unwrap()).unwrap();
                        let t3 = bracket_elements(&ez, &bracket_elements(&ex, &ey).unwrap()).unwrap();
                        let sum = t1
                            .scale(&sgn(px * pz))
                            .plus(&t2.scale(&sgn(py * px)))
                            .unwrap()
                            .plus(&t3.scale(&sgn(pz * py)))
                            .unwrap();
                        assert!(sum.is_zero(), "{x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let s = sig(1, 1, 1);
        assert_eq!(star(e(s, 1, 2)), elem(s, &[(2, 1, -1)]));
        assert_eq!(star(e(s, 2, 3)), elem(s, &[(3, 2, 1)]));
        assert_eq!(dual_star(e(s, 1, 3)), elem(s, &[(3, 1, 1)]));
        assert_eq!(dual_star(e(s, 1, 2)), star(e(s, 1, 2)));
        for x in MatrixUnit::basis(Frame::Gl(sig(2, 1, 2))) {
            let ex = AlgebraElement::unit(x);
            assert_eq!(star_element(&star(x)), ex);
            assert_eq!(dual_star_element(&dual_star(x)), ex);
        }
    }

    #[test]
    fn stars_are_anti_homomorphisms() {
        for s in [sig(1, 1, 1), sig(2, 1, 1), sig(1, 2, 2)] {
            for frame in [Frame::Gl(s), Frame::Swapped(s)] {
                let basis = MatrixUnit::basis(frame);
                for &x in &basis {
                    for &y in &basis {
                        let b = bracket(x, y).unwrap();
                        let lhs = star_element(&b);
                        let rhs = bracket_elements(&star(y), &star(x)).unwrap();
                        assert_eq!(lhs, rhs, "{x} {y}");
                        let lhs = dual_star_element(&b);
                        let rhs = bracket_elements(&dual_star(y), &dual_star(x)).unwrap();
                        assert_eq!(lhs, rhs, "{x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn root_classes() {
        let s = sig(2, 1, 1);
        let r = |a, b| Root::new(s, a, b).unwrap();
        assert_eq!(root_class(s, r(1, 3)).unwrap(), RootClass::NoncompactEven);
        assert_eq!(root_class(s, r(1, 2)).unwrap(), RootClass::CompactEven);
        assert_eq!(root_class(s, r(3, 4)).unwrap(), RootClass::CompactOdd);
        assert_eq!(root_class(s, r(2, 4)).unwrap(), RootClass::NoncompactOdd);
        assert!(root_class(s, r(3, 1)).is_err());
    }

    #[test]
    fn killing_examples() {
        let s11 = Signature::gl(1, 1).unwrap();
        assert_eq!(killing(e(s11, 1, 2), e(s11, 2, 1)).unwrap(), int(0));
        // gl(2|1): ad E11 has eigenvalue ±1 on E12, E21 (even) and E13, E31 (odd),
        // so the supertrace of its square is 2 − 2 = 0.
        let s21 = Signature::gl(2, 1).unwrap();
        assert_eq!(killing(e(s21, 1, 1), e(s21, 1, 1)).unwrap(), int(0));
        assert_eq!(killing(e(s21, 1, 2), e(s21, 2, 1)).unwrap(), int(2));
    }

    /// Dense ad-matrix supertrace built from the matrix super-commutator.
    fn killing_oracle(frame: Frame, x: MatrixUnit, y: MatrixUnit) -> Rational {
        let basis = MatrixUnit::basis(frame);
        let mut total = Rational::zero();
        for &z in &basis {
            let yz = matrix_bracket_elem(frame, &AlgebraElement::unit(y), &AlgebraElement::unit(z));
            let xyz = matrix_bracket_elem(frame, &AlgebraElement::unit(x), &yz);
            let c = xyz.coeff(z.a(), z.b());
            total += if z.parity() == 1 { -c } else { c };
        }
        total
    }

    fn matrix_bracket_elem(frame: Frame, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(frame);
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                out = out.plus(&matrix_bracket(frame, u, v).scale(&(cu * cv))).unwrap();
            }
        }
        out
    }

    fn supertrace_product(frame: Frame, x: MatrixUnit, y: MatrixUnit) -> (Rational, Rational, Rational) {
        let mx = dense(frame, &AlgebraElement::unit(x));
        let my = dense(frame, &AlgebraElement::unit(y));
        let xy = matmul(&mx, &my);
        let str = |m: &[Vec<Rational>]| -> Rational {
            (0..frame.dim())
                .map(|i| if frame.parity(i + 1) == 1 { -m[i][i].clone() } else { m[i][i].clone() })
                .sum()
        };
        (str(&xy), str(&mx), str(&my))
    }

    #[test]
    fn killing_matches_oracle_and_supertrace_formula() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2)] {
            let s = Signature::gl(m, n).unwrap();
            let frame = Frame::Gl(s);
            let basis = MatrixUnit::basis(frame);
            for &x in &basis {
                for &y in &basis {
                    let k = killing(x, y).unwrap();
                    assert_eq!(k, killing_oracle(frame, x, y));
                    let (sxy, sx, sy) = supertrace_product(frame, x, y);
                    let expected = int(2 * (m as i64 - n as i64)) * sxy - int(2) * sx * sy;
                    assert_eq!(k, expected, "m={m} n={n} {x} {y}");
                }
            }
        }
    }

    #[test]
    fn killing_supersymmetric_and_invariant() {
        let frame = Frame::Gl(sig(2, 1, 1));
        let basis = MatrixUnit::basis(frame);
        for &x in &basis {
            for &y in &basis {
                let sign = if x.parity() * y.parity() == 1 { int(-1) } else { int(1) };
                assert_eq!(killing(x, y).unwrap(), sign * killing(y, x).unwrap());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let pick = |rng: &mut ChaCha8Rng| basis[rng.gen_range(0..basis.len())];
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let lhs = killing_elements(&bracket(x, y).unwrap(), &AlgebraElement::unit(z)).unwrap();
            let rhs = killing_elements(&AlgebraElement::unit(x), &bracket(y, z).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn star_killing_sweeps() {
        assert!(star_killing_check(Signature::gl(2, 1).unwrap(), 50));
        assert!(star_killing_check(Signature::gl(1, 2).unwrap(), 50));
        for s in [sig(1, 1, 1), sig(2, 1, 1), sig(1, 1, 2)] {
            assert!(star_killing_exhaustive(s));
            assert!(star_killing_check(s, 100));
        }
    }

    #[test]
    fn tau_examples() {
        let s = sig(1, 1, 1);
        let t = tau(MatrixUnit::swapped(s, 1, 2).unwrap()).unwrap();
        assert_eq!((t.a(), t.b()), (3, 2));
        for c in 1..=3 {
            let t = tau(MatrixUnit::swapped(s, c, c).unwrap()).unwrap();
            assert_eq!(t.a(), t.b());
        }
        assert!(tau(e(s, 1, 1)).is_err());
    }

    #[test]
    fn tau_preserves_brackets_and_stars() {
        for s in [sig(1, 1, 1), sig(1, 2, 1), sig(2, 1, 2)] {
            let frame = Frame::Swapped(s);
            let basis = MatrixUnit::basis(frame);
            for &x in &basis {
                let tx = tau(x).unwrap();
                assert_eq!(x.parity(), tx.parity());
                assert_eq!(tau_element(&star(x)).unwrap(), star(tx));
                assert_eq!(tau_element(&dual_star(x)).unwrap(), dual_star(tx));
                for &y in &basis {
                    let lhs = tau_element(&bracket(x, y).unwrap()).unwrap();
                    let rhs = bracket(tx, tau(y).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn parity_of_mixed_sum_is_rejected() {
        let s = sig(1, 1, 1);
        let x = elem(s, &[(1, 2, 1), (1, 3, 1)]);
        assert_eq!(x.parity(), Err(Error::Inhomogeneous));
        assert_eq!(elem(s, &[(1, 3, 2)]).parity(), Ok(1));
        assert_eq!(e(s, 1, 2).to_string(), "E[1,2]");
    }
}
