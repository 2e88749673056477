//! Weights, roots and partitions for gl(p+q|n).
//!
//! Weights are written in the ε/δ basis: `lambda` holds the coefficients of
//! ε_1..ε_m (m = p+q) and `omega` those of δ_1..δ_n. Indices in the public
//! API are 1-based and run over 1..=m+n, with δ_μ = ε_{m+μ}.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};

/// The triple (p, q, n) fixing u(p,q|n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
    n: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize, n: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidSignature(format!("p must be positive in ({p},{q},{n})")));
        }
        if p + q + n < 2 {
            return Err(Error::InvalidSignature(format!("m+n must be at least 2 in ({p},{q},{n})")));
        }
        Ok(Self { p, q, n })
    }

    /// The shape of gl(m|n) with every even index compact, i.e. `(m, 0, n)`.
    /// Unlike [`Signature::new`] this allows m+n = 1.
    pub fn gl(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSignature("m must be positive".into()));
        }
        Ok(Self { p: m, q: 0, n })
    }

    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.p + self.q
    }
    /// m + n.
    pub fn dim(&self) -> usize {
        self.p + self.q + self.n
    }

    /// 0 for even indices (≤ m), 1 for odd ones.
    pub fn parity(&self, a: usize) -> u8 {
        u8::from(a > self.m())
    }

    pub fn same_shape(&self, other: &Signature) -> bool {
        self.m() == other.m() && self.n == other.n
    }

    /// Fails unless q ≥ 1 and n ≥ 1.
    pub fn require_noncompact(&self) -> Result<()> {
        if self.q == 0 || self.n == 0 {
            return Err(Error::UnsupportedSignature(format!(
                "{self}: requires q >= 1 and n >= 1"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.q, self.n)
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("signature must be p,q,n: {s:?}")));
        }
        let mut v = [0usize; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad signature entry {part:?}")))?;
        }
        Signature::new(v[0], v[1], v[2])
    }
}

/// A weight Σ λ_i ε_i + Σ ω_μ δ_μ with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    sig: Signature,
    lambda: Vec<Rational>,
    omega: Vec<Rational>,
}

impl Weight {
    pub fn new(sig: Signature, lambda: Vec<Rational>, omega: Vec<Rational>) -> Result<Self> {
        if lambda.len() != sig.m() || omega.len() != sig.n() {
            return Err(Error::Shape {
                expected: format!("{} even and {} odd entries", sig.m(), sig.n()),
                got: format!("{} and {}", lambda.len(), omega.len()),
            });
        }
        Ok(Self { sig, lambda, omega })
    }

    /// Builds a weight from the concatenated (λ, ω) vector.
    pub fn from_entries(sig: Signature, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != sig.dim() {
            return Err(Error::Shape {
                expected: format!("{} entries", sig.dim()),
                got: format!("{}", entries.len()),
            });
        }
        let mut lambda = entries;
        let omega = lambda.split_off(sig.m());
        Ok(Self { sig, lambda, omega })
    }

    /// Convenience constructor from integer numerator/denominator pairs.
    pub fn from_fracs(sig: Signature, lambda: &[(i64, i64)], omega: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            sig,
            lambda.iter().map(|&(a, b)| frac(a, b)).collect(),
            omega.iter().map(|&(a, b)| frac(a, b)).collect(),
        )
    }

    pub fn from_ints(sig: Signature, lambda: &[i64], omega: &[i64]) -> Result<Self> {
        Self::new(
            sig,
            lambda.iter().map(|&a| int(a)).collect(),
            omega.iter().map(|&a| int(a)).collect(),
        )
    }

    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            lambda: vec![Rational::zero(); sig.m()],
            omega: vec![Rational::zero(); sig.n()],
        }
    }

    /// ε_a (which is δ_{a-m} for a > m).
    pub fn unit(sig: Signature, a: usize) -> Result<Self> {
        check_index(sig, a)?;
        let mut w = Self::zero(sig);
        *w.entry_mut(a) = int(1);
        Ok(w)
    }

    /// ε_a − ε_b.
    pub fn root(sig: Signature, a: usize, b: usize) -> Result<Self> {
        Ok(Self::unit(sig, a)? - Self::unit(sig, b)?)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }
    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }
    pub fn omega(&self) -> &[Rational] {
        &self.omega
    }

    /// Coefficient of ε_a, 1-based over 1..=m+n.
    pub fn entry(&self, a: usize) -> &Rational {
        let m = self.sig.m();
        if a <= m {
            &self.lambda[a - 1]
        } else {
            &self.omega[a - m - 1]
        }
    }

    fn entry_mut(&mut self, a: usize) -> &mut Rational {
        let m = self.sig.m();
        if a <= m {
            &mut self.lambda[a - 1]
        } else {
            &mut self.omega[a - m - 1]
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.lambda.iter().chain(self.omega.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(Zero::is_zero)
    }

    /// Same coefficients read under another signature of the same shape.
    pub fn with_signature(&self, sig: Signature) -> Result<Self> {
        if !self.sig.same_shape(&sig) {
            return Err(mismatch(self.sig, sig));
        }
        Ok(Self { sig, ..self.clone() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x * c)
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self {
            sig: self.sig,
            lambda: self.lambda.iter().map(&f).collect(),
            omega: self.omega.iter().map(&f).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert!(
            self.sig.same_shape(&other.sig),
            "weight shape mismatch: {} vs {}",
            self.sig,
            other.sig
        );
        Self {
            sig: self.sig,
            lambda: self.lambda.iter().zip(&other.lambda).map(|(a, b)| f(a, b)).collect(),
            omega: self.omega.iter().zip(&other.omega).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let (even, odd) = split_blocks(text)?;
        Self::new(sig, parse_list(even)?, parse_list(odd)?)
    }
}

fn check_index(sig: Signature, a: usize) -> Result<()> {
    if a == 0 || a > sig.dim() {
        return Err(Error::IndexOutOfRange(format!("{a} not in 1..={}", sig.dim())));
    }
    Ok(())
}

fn mismatch(a: Signature, b: Signature) -> Error {
    Error::SignatureMismatch {
        left: a.to_string(),
        right: b.to_string(),
    }
}

fn split_blocks(text: &str) -> Result<(&str, &str)> {
    match text.split_once(';') {
        Some((a, b)) if !b.contains(';') => Ok((a, b)),
        _ => Err(Error::Parse(format!(
            "weight must have exactly one ';' separating the blocks: {text:?}"
        ))),
    }
}

fn parse_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(rational::parse).collect()
}

fn join(xs: &[Rational]) -> String {
    xs.iter().map(rational::format).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", join(&self.lambda), join(&self.omega))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.map(|x| -x)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// The invariant form (ε_i,ε_j) = δ_ij, (δ_μ,δ_ν) = −δ_μν, (ε_i,δ_μ) = 0.
pub fn bilinear(u: &Weight, v: &Weight) -> Result<Rational> {
    if !u.sig.same_shape(&v.sig) {
        return Err(mismatch(u.sig, v.sig));
    }
    let even: Rational = u.lambda.iter().zip(&v.lambda).map(|(a, b)| a * b).sum();
    let odd: Rational = u.omega.iter().zip(&v.omega).map(|(a, b)| a * b).sum();
    Ok(even - odd)
}

/// Graded half-sum of positive roots of gl(m|n), on the shape `(m, 0, n)`.
pub fn rho(m: usize, n: usize) -> Result<Weight> {
    let sig = Signature::gl(m, n)?;
    Ok(rho_for(sig))
}

/// ρ of gl(m|n) carried on `sig` (only the shape of `sig` matters).
pub fn rho_for(sig: Signature) -> Weight {
    let (m, n) = (sig.m() as i64, sig.n() as i64);
    let lambda = (1..=m).map(|i| frac(m - n - 2 * i + 1, 2)).collect();
    let omega = (1..=n).map(|mu| frac(m + n - 2 * mu + 1, 2)).collect();
    Weight { sig, lambda, omega }
}

/// First violated compact-dominance inequality, if any.
pub fn dominance_violation(w: &Weight) -> Option<String> {
    let sig = w.sig;
    let (p, m, n) = (sig.p(), sig.m(), sig.n());
    let even = (1..p).chain(p + 1..m);
    for i in even {
        let d = &w.lambda[i - 1] - &w.lambda[i];
        if !rational::is_nonneg_integer(&d) {
            return Some(format!(
                "lambda_{i} - lambda_{} = {} is not a non-negative integer",
                i + 1,
                rational::format(&d)
            ));
        }
    }
    for mu in 1..n {
        let d = &w.omega[mu - 1] - &w.omega[mu];
        if !rational::is_nonneg_integer(&d) {
            return Some(format!(
                "omega_{mu} - omega_{} = {} is not a non-negative integer",
                mu + 1,
                rational::format(&d)
            ));
        }
    }
    None
}

/// Membership in D⁺: integral dominance for the compact roots.
pub fn is_dominant(w: &Weight) -> bool {
    dominance_violation(w).is_none()
}

/// Membership in P⁺: dominant with all entries integers.
pub fn is_integral(w: &Weight) -> bool {
    w.entries().all(|x| x.is_integer()) && is_dominant(w)
}

/// Weight of L(Λ) ⊗ ℂ_s: adds s to every λ and −s to every ω.
pub fn shift_scalar(w: &Weight, s: &Rational) -> Weight {
    Weight {
        sig: w.sig,
        lambda: w.lambda.iter().map(|x| x + s).collect(),
        omega: w.omega.iter().map(|x| x - s).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSide {
    /// Adds s to λ_{p+1..m}.
    Plus,
    /// Subtracts s from λ_{1..p}.
    Minus,
}

pub fn shift_block(w: &Weight, s: &Rational, side: BlockSide) -> Result<Weight> {
    if s.is_negative() || *s > int(1) {
        return Err(Error::ShiftOutOfRange(rational::format(s)));
    }
    let p = w.sig.p();
    let mut out = w.clone();
    for (i, x) in out.lambda.iter_mut().enumerate() {
        match side {
            BlockSide::Plus if i >= p => *x += s,
            BlockSide::Minus if i < p => *x -= s,
            _ => {}
        }
    }
    Ok(out)
}

/// A positive or negative root ε_a − ε_b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub a: usize,
    pub b: usize,
}

impl Root {
    pub fn new(sig: Signature, a: usize, b: usize) -> Result<Self> {
        check_index(sig, a)?;
        check_index(sig, b)?;
        if a == b {
            return Err(Error::IndexOutOfRange(format!("root needs a != b, got {a}")));
        }
        Ok(Self { a, b })
    }

    pub fn is_positive(&self) -> bool {
        self.a < self.b
    }

    pub fn parity(&self, sig: Signature) -> u8 {
        (sig.parity(self.a) + sig.parity(self.b)) % 2
    }

    /// Number of simple roots in a positive root.
    pub fn height(&self) -> usize {
        self.b.abs_diff(self.a)
    }

    pub fn to_weight(&self, sig: Signature) -> Weight {
        Weight::root(sig, self.a, self.b).expect("indices checked at construction")
    }
}

/// A non-increasing integer sequence, possibly with negative parts.
///
/// Equality ignores trailing zeros.
#[derive(Debug, Clone)]
pub struct GeneralizedPartition {
    parts: Vec<i64>,
}

impl GeneralizedPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with the convention λ_i = 0 outside 1..=len.
    pub fn get(&self, i: i64) -> i64 {
        if i < 1 || i as usize > self.parts.len() {
            0
        } else {
            self.parts[i as usize - 1]
        }
    }

    /// λ₊, the entrywise max with 0.
    pub fn plus(&self) -> Self {
        Self {
            parts: self.parts.iter().map(|&x| x.max(0)).collect(),
        }
    }

    /// λ₋, the entrywise min with 0.
    pub fn minus(&self) -> Self {
        Self {
            parts: self.parts.iter().map(|&x| x.min(0)).collect(),
        }
    }

    /// λ₋* = (−min(λ_k,0), …, −min(λ_1,0)).
    pub fn minus_star(&self) -> Self {
        Self {
            parts: self.parts.iter().rev().map(|&x| -(x.min(0))).collect(),
        }
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().map(|x| x.abs()).sum()
    }

    fn trimmed(&self) -> &[i64] {
        let end = self
            .parts
            .iter()
            .rposition(|&x| x != 0)
            .map_or(0, |i| i + 1);
        &self.parts[..end]
    }

    /// Conjugate of an ordinary partition; (0) and the empty partition map to (0).
    pub fn conjugate(&self) -> Result<Self> {
        if let Some(&x) = self.parts.iter().find(|&&x| x < 0) {
            return Err(Error::NegativePart(format!("{x} in {self}")));
        }
        let first = self.parts.first().copied().unwrap_or(0);
        if first == 0 {
            return Ok(Self { parts: vec![0] });
        }
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&x| x >= i).count() as i64)
            .collect();
        Ok(Self { parts })
    }
}

impl PartialEq for GeneralizedPartition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for GeneralizedPartition {}

impl Hash for GeneralizedPartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Reasons `lam` falls outside 𝒫^d_{p,q|n}, if any.
pub fn admissibility_violation(lam: &GeneralizedPartition, sig: Signature) -> Option<String> {
    let d = lam.len() as i64;
    let (p, q, n) = (sig.p() as i64, sig.q() as i64, sig.n() as i64);
    if lam.get(q + 1) > n {
        return Some(format!("lambda_{} = {} exceeds n = {n}", q + 1, lam.get(q + 1)));
    }
    if lam.get(d - p) < 0 {
        return Some(format!("lambda_{} = {} is negative", d - p, lam.get(d - p)));
    }
    None
}

/// The gl(p+q|n) highest weight paired with the gl_d weight `lam` under Howe duality.
pub fn lambda_flat(lam: &GeneralizedPartition, d: usize, sig: Signature) -> Result<Weight> {
    if d == 0 || lam.len() != d {
        return Err(Error::NotAdmissible(format!(
            "length {} does not match d = {d}",
            lam.len()
        )));
    }
    if let Some(why) = admissibility_violation(lam, sig) {
        return Err(Error::NotAdmissible(format!("{lam}: {why}")));
    }
    let (p, q, n) = (sig.p() as i64, sig.q() as i64, sig.n() as i64);
    let di = d as i64;
    let mut entries = Vec::with_capacity(sig.dim());
    for k in 1..=p {
        entries.push(int(-di + lam.get(di - p + k).min(0)));
    }
    let plus = lam.plus();
    for k in 1..=q {
        entries.push(int(plus.get(k)));
    }
    let conj = plus.conjugate()?;
    for mu in 1..=n {
        entries.push(int((conj.get(mu) - q).max(0)));
    }
    Weight::from_entries(sig, entries)
}

/// A gl(n|q+p) weight (even block of length n, odd block of length m),
/// tied to the gl(p+q|n) signature it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwappedWeight {
    sig: Signature,
    even: Vec<Rational>,
    odd: Vec<Rational>,
}

impl SwappedWeight {
    pub fn new(sig: Signature, even: Vec<Rational>, odd: Vec<Rational>) -> Result<Self> {
        if even.len() != sig.n() || odd.len() != sig.m() {
            return Err(Error::Shape {
                expected: format!("{} even and {} odd entries", sig.n(), sig.m()),
                got: format!("{} and {}", even.len(), odd.len()),
            });
        }
        Ok(Self { sig, even, odd })
    }

    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let (even, odd) = split_blocks(text)?;
        Self::new(sig, parse_list(even)?, parse_list(odd)?)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }
    pub fn even(&self) -> &[Rational] {
        &self.even
    }
    pub fn odd(&self) -> &[Rational] {
        &self.odd
    }

    /// Back to a gl(p+q|n) weight by reversing all entries.
    pub fn tau(&self) -> Weight {
        let mut all: Vec<Rational> = self.even.iter().chain(self.odd.iter()).cloned().collect();
        all.reverse();
        Weight::from_entries(self.sig, all).expect("shape preserved by reversal")
    }

    pub fn neg(&self) -> Self {
        Self {
            sig: self.sig,
            even: self.even.iter().map(|x| -x).collect(),
            odd: self.odd.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for SwappedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", join(&self.even), join(&self.odd))
    }
}

/// Λ^τ = (ω_n,…,ω_1, λ_m,…,λ_1) read as a gl(n|q+p) weight.
pub fn tau_weight(w: &Weight) -> SwappedWeight {
    let mut all: Vec<Rational> = w.entries().cloned().collect();
    all.reverse();
    let odd = all.split_off(w.sig.n());
    SwappedWeight {
        sig: w.sig,
        even: all,
        odd,
    }
}

/// θ = Σ_i Σ_k a_ik (ε_i − ε_k) + Σ_i Σ_μ b_iμ (ε_i − δ_μ), with i ≤ p < k ≤ m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaShift {
    sig: Signature,
    /// p × q, entry [i][k] multiplies ε_{i+1} − ε_{p+k+1}.
    a: Vec<Vec<u32>>,
    /// p × n, entry [i][μ] multiplies ε_{i+1} − δ_{μ+1}.
    b: Vec<Vec<bool>>,
}

impl ThetaShift {
    pub fn new(sig: Signature, a: Vec<Vec<u32>>, b: Vec<Vec<bool>>) -> Result<Self> {
        let ok = a.len() == sig.p()
            && b.len() == sig.p()
            && a.iter().all(|r| r.len() == sig.q())
            && b.iter().all(|r| r.len() == sig.n());
        if !ok {
            return Err(Error::Shape {
                expected: format!("{}x{} and {}x{} matrices", sig.p(), sig.q(), sig.p(), sig.n()),
                got: "mismatched rows".into(),
            });
        }
        Ok(Self { sig, a, b })
    }

    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            a: vec![vec![0; sig.q()]; sig.p()],
            b: vec![vec![false; sig.n()]; sig.p()],
        }
    }

    /// A single odd step ε_i − δ_μ (1-based).
    pub fn odd_step(sig: Signature, i: usize, mu: usize) -> Result<Self> {
        if i == 0 || i > sig.p() || mu == 0 || mu > sig.n() {
            return Err(Error::IndexOutOfRange(format!("(i,mu) = ({i},{mu})")));
        }
        let mut t = Self::zero(sig);
        t.b[i - 1][mu - 1] = true;
        Ok(t)
    }

    /// A single even step ε_i − ε_k with i ≤ p < k ≤ m (1-based).
    pub fn even_step(sig: Signature, i: usize, k: usize) -> Result<Self> {
        if i == 0 || i > sig.p() || k <= sig.p() || k > sig.m() {
            return Err(Error::IndexOutOfRange(format!("(i,k) = ({i},{k})")));
        }
        let mut t = Self::zero(sig);
        t.a[i - 1][k - sig.p() - 1] = 1;
        Ok(t)
    }

    pub fn to_weight(&self) -> Weight {
        let sig = self.sig;
        let (p, m) = (sig.p(), sig.m());
        let mut w = Weight::zero(sig);
        for i in 0..p {
            for (k, &c) in self.a[i].iter().enumerate() {
                *w.entry_mut(i + 1) += int(c as i64);
                *w.entry_mut(p + k + 1) -= int(c as i64);
            }
            for (mu, &bit) in self.b[i].iter().enumerate() {
                if bit {
                    *w.entry_mut(i + 1) += int(1);
                    *w.entry_mut(m + mu + 1) -= int(1);
                }
            }
        }
        w
    }

    /// Total height in simple roots.
    pub fn height(&self) -> usize {
        let sig = self.sig;
        let (p, m) = (sig.p(), sig.m());
        let mut h = 0;
        for i in 0..p {
            for (k, &c) in self.a[i].iter().enumerate() {
                h += c as usize * (p + k - i);
            }
            for (mu, &bit) in self.b[i].iter().enumerate() {
                if bit {
                    h += m + mu - i;
                }
            }
        }
        h
    }

    /// Every θ of total height ≤ `cap`, starting with θ = 0.
    pub fn enumerate(sig: Signature, cap: usize) -> Vec<ThetaShift> {
        let (p, q, n, m) = (sig.p(), sig.q(), sig.n(), sig.m());
        // (i, k_or_mu, is_odd, height)
        let mut slots = Vec::new();
        for i in 0..p {
            for k in 0..q {
                slots.push((i, k, false, p + k - i));
            }
            for mu in 0..n {
                slots.push((i, mu, true, m + mu - i));
            }
        }
        let mut out = Vec::new();
        let mut cur = Self::zero(sig);
        fn rec(
            slots: &[(usize, usize, bool, usize)],
            idx: usize,
            budget: usize,
            cur: &mut ThetaShift,
            out: &mut Vec<ThetaShift>,
        ) {
            if idx == slots.len() {
                out.push(cur.clone());
                return;
            }
            let (i, j, odd, h) = slots[idx];
            if odd {
                rec(slots, idx + 1, budget, cur, out);
                if h <= budget {
                    cur.b[i][j] = true;
                    rec(slots, idx + 1, budget - h, cur, out);
                    cur.b[i][j] = false;
                }
            } else {
                let mut c = 0;
                loop {
                    cur.a[i][j] = c;
                    rec(slots, idx + 1, budget - c as usize * h, cur, out);
                    if (c as usize + 1) * h > budget {
                        break;
                    }
                    c += 1;
                }
                cur.a[i][j] = 0;
            }
        }
        rec(&slots, 0, cap, &mut cur, &mut out);
        out
    }
}
