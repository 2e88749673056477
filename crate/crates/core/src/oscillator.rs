//! The polynomial superalgebra ℂ^d_{p,q|n}[x, y, η] with its commuting
//! gl_d and gl(p+q|n) actions by differential operators, the Fock-type
//! Hermitian form, and joint highest weight vector extraction.
//!
//! Variables: x^a_k (a ≤ d, k ≤ q) and y^a_i (a ≤ d, i ≤ p) are even,
//! η^a_μ (a ≤ d, μ ≤ n) are odd. A monomial keeps its η factors in the
//! canonical order sorted by (a, μ), leftmost first.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{integerize, nullspace};
use crate::rational::{int, Rational};
use crate::superalgebra::{bracket_terms, Frame, MatrixUnit};
use crate::superweights::{lambda_flat, GeneralizedPartition, Signature, Weight};

/// A monomial Π x^e Π y^f · η^{a₁μ₁}⋯η^{a_rμ_r} with the η part in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OscMonomial {
    /// Exponent of x^a_k at position (a−1)q + (k−1).
    xexp: Vec<u32>,
    /// Exponent of y^a_i at position (a−1)p + (i−1).
    yexp: Vec<u32>,
    /// Bit (a−1)n + (μ−1) is set iff η^a_μ is present.
    eta: u64,
}

impl OscMonomial {
    pub fn degree(&self) -> u32 {
        self.xexp.iter().sum::<u32>() + self.yexp.iter().sum::<u32>() + self.eta.count_ones()
    }

    /// ⟨M, M⟩: the product of the factorials of the even exponents.
    pub fn norm(&self) -> Rational {
        let mut out = num_bigint::BigInt::one();
        for &e in self.xexp.iter().chain(&self.yexp) {
            for k in 2..=e {
                out *= k;
            }
        }
        Rational::from_integer(out)
    }

    pub fn parity(&self) -> u8 {
        (self.eta.count_ones() % 2) as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    X(usize),
    Y(usize),
    Eta(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prim {
    Mul(Var),
    Diff(Var),
}

/// Sign of moving a factor at bit `t` to the front of the η block.
fn eta_sign(eta: u64, t: usize) -> i64 {
    if (eta & ((1u64 << t) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn apply_prim(prim: Prim, m: &mut OscMonomial) -> Option<i64> {
    match prim {
        Prim::Mul(Var::X(t)) => {
            m.xexp[t] += 1;
            Some(1)
        }
        Prim::Mul(Var::Y(t)) => {
            m.yexp[t] += 1;
            Some(1)
        }
        Prim::Diff(Var::X(t)) => {
            let e = m.xexp[t];
            if e == 0 {
                return None;
            }
            m.xexp[t] -= 1;
            Some(i64::from(e))
        }
        Prim::Diff(Var::Y(t)) => {
            let e = m.yexp[t];
            if e == 0 {
                return None;
            }
            m.yexp[t] -= 1;
            Some(i64::from(e))
        }
        Prim::Mul(Var::Eta(t)) => {
            if m.eta >> t & 1 == 1 {
                return None;
            }
            let s = eta_sign(m.eta, t);
            m.eta |= 1 << t;
            Some(s)
        }
        Prim::Diff(Var::Eta(t)) => {
            if m.eta >> t & 1 == 0 {
                return None;
            }
            let s = eta_sign(m.eta, t);
            m.eta &= !(1 << t);
            Some(s)
        }
    }
}

/// c · P Q, read as an operator: Q acts first.
#[derive(Debug, Clone, Copy)]
struct Word {
    coeff: i64,
    left: Prim,
    right: Prim,
}

/// A differential operator, as a sum of two-letter words.
#[derive(Debug, Clone, Default)]
pub struct Operator {
    words: Vec<Word>,
}

impl Operator {
    fn push(&mut self, coeff: i64, left: Prim, right: Prim) {
        self.words.push(Word { coeff, left, right });
    }

    fn apply_monomial(&self, m: &OscMonomial, c: &Rational, out: &mut BTreeMap<OscMonomial, Rational>) {
        for w in &self.words {
            let mut mm = m.clone();
            let Some(s1) = apply_prim(w.right, &mut mm) else { continue };
            let Some(s2) = apply_prim(w.left, &mut mm) else { continue };
            let k = w.coeff * s1 * s2;
            *out.entry(mm).or_insert_with(Rational::zero) += c * int(k);
        }
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        let mut out = BTreeMap::new();
        for (m, c) in &f.terms {
            self.apply_monomial(m, c, &mut out);
        }
        SuperPolynomial::from_map(out)
    }
}

/// A finite rational combination of monomials with no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuperPolynomial {
    terms: BTreeMap<OscMonomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: OscMonomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: OscMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    fn from_map(mut terms: BTreeMap<OscMonomial, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OscMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &OscMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_map(self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            *out.entry(m.clone()).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// The superalgebra product, with η signs from merging into canonical order.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.eta & b.eta != 0 {
                    continue;
                }
                let mut swaps = 0u32;
                let mut rest = a.eta;
                while rest != 0 {
                    let t = rest.trailing_zeros();
                    swaps += (b.eta & ((1u64 << t) - 1)).count_ones();
                    rest &= rest - 1;
                }
                let m = OscMonomial {
                    xexp: a.xexp.iter().zip(&b.xexp).map(|(x, y)| x + y).collect(),
                    yexp: a.yexp.iter().zip(&b.yexp).map(|(x, y)| x + y).collect(),
                    eta: a.eta | b.eta,
                };
                let c = ca * cb;
                let c = if swaps % 2 == 0 { c } else { -c };
                *out.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        Self::from_map(out)
    }

    /// Rescale to coprime integer coefficients with a positive leading term.
    pub fn normalized(&self) -> Self {
        let (ms, cs): (Vec<_>, Vec<_>) = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).unzip();
        Self::from_map(ms.into_iter().zip(integerize(cs)).collect())
    }
}

/// ⟨f, g⟩: distinct monomials are orthogonal and ⟨M, M⟩ is [`OscMonomial::norm`].
/// Coefficients are rational, so conjugation is trivial.
pub fn herm(f: &SuperPolynomial, g: &SuperPolynomial) -> Rational {
    let mut out = Rational::zero();
    for (m, c) in &f.terms {
        if let Some(d) = g.terms.get(m) {
            out += c * d * m.norm();
        }
    }
    out
}

/// A basis element of gl_d ⊕ gl(p+q|n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// e_ab of gl_d.
    Gld(usize, usize),
    /// E_ab of gl(p+q|n).
    Gl(usize, usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Gld(a, b) => write!(f, "e[{a},{b}]"),
            Generator::Gl(a, b) => write!(f, "E[{a},{b}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    Y(usize),
    X(usize),
    Eta(usize),
}

/// The space ℂ^d_{p,q|n}[x, y, η] and its two actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Oscillator {
    d: usize,
    sig: Signature,
}

impl Oscillator {
    pub fn new(d: usize, sig: Signature) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidSignature("d must be positive".into()));
        }
        if d * sig.n() > 64 {
            return Err(Error::UnsupportedSignature(format!("d*n = {} odd variables exceeds 64", d * sig.n())));
        }
        Ok(Self { d, sig })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    fn check(&self, what: &str, a: usize, max: usize) -> Result<()> {
        if a == 0 || a > max {
            return Err(Error::IndexOutOfRange(format!("{what} = {a} not in 1..={max}")));
        }
        Ok(())
    }

    fn xi(&self, a: usize, k: usize) -> usize {
        (a - 1) * self.sig.q() + (k - 1)
    }
    fn yi(&self, a: usize, i: usize) -> usize {
        (a - 1) * self.sig.p() + (i - 1)
    }
    fn ei(&self, a: usize, mu: usize) -> usize {
        (a - 1) * self.sig.n() + (mu - 1)
    }

    pub fn one(&self) -> OscMonomial {
        OscMonomial {
            xexp: vec![0; self.d * self.sig.q()],
            yexp: vec![0; self.d * self.sig.p()],
            eta: 0,
        }
    }

    pub fn x(&self, a: usize, k: usize) -> Result<OscMonomial> {
        self.check("a", a, self.d)?;
        self.check("k", k, self.sig.q())?;
        let mut m = self.one();
        m.xexp[self.xi(a, k)] = 1;
        Ok(m)
    }

    pub fn y(&self, a: usize, i: usize) -> Result<OscMonomial> {
        self.check("a", a, self.d)?;
        self.check("i", i, self.sig.p())?;
        let mut m = self.one();
        m.yexp[self.yi(a, i)] = 1;
        Ok(m)
    }

    pub fn eta(&self, a: usize, mu: usize) -> Result<OscMonomial> {
        self.check("a", a, self.d)?;
        self.check("mu", mu, self.sig.n())?;
        let mut m = self.one();
        m.eta = 1 << self.ei(a, mu);
        Ok(m)
    }

    /// ρ(e_ab) = Σ_k x^a_k ∂x^b_k − Σ_i y^b_i ∂y^a_i + Σ_μ η^a_μ ∂η^b_μ.
    pub fn gld_operator(&self, a: usize, b: usize) -> Result<Operator> {
        self.check("a", a, self.d)?;
        self.check("b", b, self.d)?;
        let (p, q, n) = (self.sig.p(), self.sig.q(), self.sig.n());
        let mut op = Operator::default();
        for k in 1..=q {
            op.push(1, Prim::Mul(Var::X(self.xi(a, k))), Prim::Diff(Var::X(self.xi(b, k))));
        }
        for i in 1..=p {
            op.push(-1, Prim::Mul(Var::Y(self.yi(b, i))), Prim::Diff(Var::Y(self.yi(a, i))));
        }
        for mu in 1..=n {
            op.push(1, Prim::Mul(Var::Eta(self.ei(a, mu))), Prim::Diff(Var::Eta(self.ei(b, mu))));
        }
        Ok(op)
    }

    fn block(&self, c: usize) -> Block {
        let (p, m) = (self.sig.p(), self.sig.m());
        if c <= p {
            Block::Y(c)
        } else if c <= m {
            Block::X(c - p)
        } else {
            Block::Eta(c - m)
        }
    }

    /// ρ(E_ab), one summand per a' ≤ d, following the nine-case table.
    pub fn gl_operator(&self, a: usize, b: usize) -> Result<Operator> {
        self.check("a", a, self.sig.dim())?;
        self.check("b", b, self.sig.dim())?;
        let mut op = Operator::default();
        for s in 1..=self.d {
            let y = |i| Var::Y(self.yi(s, i));
            let x = |k| Var::X(self.xi(s, k));
            let h = |mu| Var::Eta(self.ei(s, mu));
            use Prim::{Diff, Mul};
            match (self.block(a), self.block(b)) {
                // −∂y_i y_j
                (Block::Y(i), Block::Y(j)) => op.push(-1, Diff(y(i)), Mul(y(j))),
                // ∂y_i ∂x_ℓ
                (Block::Y(i), Block::X(l)) => op.push(1, Diff(y(i)), Diff(x(l))),
                // ∂y_i ∂η_ν
                (Block::Y(i), Block::Eta(nu)) => op.push(1, Diff(y(i)), Diff(h(nu))),
                // −x_k y_j
                (Block::X(k), Block::Y(j)) => op.push(-1, Mul(x(k)), Mul(y(j))),
                // x_k ∂x_ℓ
                (Block::X(k), Block::X(l)) => op.push(1, Mul(x(k)), Diff(x(l))),
                // x_k ∂η_ν
                (Block::X(k), Block::Eta(nu)) => op.push(1, Mul(x(k)), Diff(h(nu))),
                // −η_μ y_j
                (Block::Eta(mu), Block::Y(j)) => op.push(-1, Mul(h(mu)), Mul(y(j))),
                // η_μ ∂x_ℓ
                (Block::Eta(mu), Block::X(l)) => op.push(1, Mul(h(mu)), Diff(x(l))),
                // η_μ ∂η_ν
                (Block::Eta(mu), Block::Eta(nu)) => op.push(1, Mul(h(mu)), Diff(h(nu))),
            }
        }
        Ok(op)
    }

    pub fn operator(&self, g: Generator) -> Result<Operator> {
        match g {
            Generator::Gld(a, b) => self.gld_operator(a, b),
            Generator::Gl(a, b) => self.gl_operator(a, b),
        }
    }

    pub fn act_gld(&self, a: usize, b: usize, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        Ok(self.gld_operator(a, b)?.apply(f))
    }

    pub fn act_gl(&self, e: MatrixUnit, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        if e.frame() != Frame::Gl(self.sig) {
            return Err(Error::SignatureMismatch {
                left: format!("{:?}", e.frame()),
                right: self.sig.to_string(),
            });
        }
        Ok(self.gl_operator(e.a(), e.b())?.apply(f))
    }

    pub fn act(&self, g: Generator, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        Ok(self.operator(g)?.apply(f))
    }

    pub fn parity(&self, g: Generator) -> u8 {
        match g {
            Generator::Gld(..) => 0,
            Generator::Gl(a, b) => (self.sig.parity(a) + self.sig.parity(b)) % 2,
        }
    }

    /// All generators: gl_d units first, then gl(p+q|n) units, each lexicographic.
    pub fn generators(&self) -> Vec<Generator> {
        let d = self.d;
        let dim = self.sig.dim();
        let gld = (1..=d).flat_map(|a| (1..=d).map(move |b| Generator::Gld(a, b)));
        let gl = (1..=dim).flat_map(|a| (1..=dim).map(move |b| Generator::Gl(a, b)));
        gld.chain(gl).collect()
    }

    /// e_ab and E_ab with a < b.
    pub fn raising(&self) -> Vec<Generator> {
        self.generators()
            .into_iter()
            .filter(|g| match *g {
                Generator::Gld(a, b) | Generator::Gl(a, b) => a < b,
            })
            .collect()
    }

    /// σ(g) as a signed generator: e_ab ↦ e_ba, E_ij ↦ ±E_ji with − iff
    /// exactly one of i, j is at most p.
    pub fn sigma(&self, g: Generator) -> (i64, Generator) {
        match g {
            Generator::Gld(a, b) => (1, Generator::Gld(b, a)),
            Generator::Gl(i, j) => {
                let p = self.sig.p();
                let sign = if (i <= p) == (j <= p) { 1 } else { -1 };
                (sign, Generator::Gl(j, i))
            }
        }
    }

    /// [g, h] as signed generators.
    pub fn bracket(&self, g: Generator, h: Generator) -> Vec<(i64, Generator)> {
        match (g, h) {
            (Generator::Gld(a, b), Generator::Gld(c, e)) => {
                let frame = Frame::Gl(Signature::gl(self.d, 0).expect("d > 0"));
                bracket_terms(frame, (a, b), (c, e))
                    .into_iter()
                    .map(|(r, s, k)| (k, Generator::Gld(r, s)))
                    .collect()
            }
            (Generator::Gl(a, b), Generator::Gl(c, e)) => bracket_terms(Frame::Gl(self.sig), (a, b), (c, e))
                .into_iter()
                .map(|(r, s, k)| (k, Generator::Gl(r, s)))
                .collect(),
            _ => Vec::new(),
        }
    }

    /// The gl_d weight: #x^a + #η^a − #y^a for each a.
    pub fn gld_weight(&self, m: &OscMonomial) -> Vec<i64> {
        let (p, q, n) = (self.sig.p(), self.sig.q(), self.sig.n());
        (1..=self.d)
            .map(|a| {
                let xs: u32 = (1..=q).map(|k| m.xexp[self.xi(a, k)]).sum();
                let ys: u32 = (1..=p).map(|i| m.yexp[self.yi(a, i)]).sum();
                let es = (1..=n).filter(|&mu| m.eta >> self.ei(a, mu) & 1 == 1).count() as i64;
                i64::from(xs) + es - i64::from(ys)
            })
            .collect()
    }

    /// The gl(p+q|n) weight: −d − #y_i, then #x_k, then #η_μ.
    pub fn gl_weight_entries(&self, m: &OscMonomial) -> Vec<i64> {
        let (p, q, n) = (self.sig.p(), self.sig.q(), self.sig.n());
        let d = self.d as i64;
        let mut out = Vec::with_capacity(self.sig.dim());
        for i in 1..=p {
            let ys: u32 = (1..=self.d).map(|a| m.yexp[self.yi(a, i)]).sum();
            out.push(-d - i64::from(ys));
        }
        for k in 1..=q {
            let xs: u32 = (1..=self.d).map(|a| m.xexp[self.xi(a, k)]).sum();
            out.push(i64::from(xs));
        }
        for mu in 1..=n {
            out.push((1..=self.d).filter(|&a| m.eta >> self.ei(a, mu) & 1 == 1).count() as i64);
        }
        out
    }

    pub fn gl_weight(&self, m: &OscMonomial) -> Weight {
        Weight::from_entries(self.sig, self.gl_weight_entries(m).into_iter().map(int).collect())
            .expect("entry count matches signature")
    }

    fn even_count(&self) -> usize {
        self.d * (self.sig.p() + self.sig.q())
    }

    fn odd_count(&self) -> usize {
        self.d * self.sig.n()
    }

    /// Every monomial of total degree exactly `degree`, in a fixed order.
    pub fn monomials(&self, degree: usize) -> Vec<OscMonomial> {
        let ev = self.even_count();
        let od = self.odd_count();
        let nx = self.d * self.sig.q();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << od) {
            let e = mask.count_ones() as usize;
            if e > degree {
                continue;
            }
            let mut exps = vec![0u32; ev];
            compositions(degree - e, 0, &mut exps, &mut |exps| {
                out.push(OscMonomial {
                    xexp: exps[..nx].to_vec(),
                    yexp: exps[nx..].to_vec(),
                    eta: mask,
                });
            });
        }
        out.sort();
        out
    }

    pub fn monomials_up_to(&self, max_degree: usize) -> Vec<OscMonomial> {
        (0..=max_degree).flat_map(|k| self.monomials(k)).collect()
    }
}

fn compositions(total: usize, pos: usize, exps: &mut [u32], emit: &mut impl FnMut(&[u32])) {
    if pos == exps.len() {
        if total == 0 {
            emit(exps);
        }
        return;
    }
    if pos + 1 == exps.len() {
        exps[pos] = total as u32;
        emit(exps);
        exps[pos] = 0;
        return;
    }
    for k in 0..=total {
        exps[pos] = k as u32;
        compositions(total - k, pos + 1, exps, emit);
    }
    exps[pos] = 0;
}

/// Number of monomials of total degree ≤ `max_degree`.
pub fn monomial_count(d: usize, sig: Signature, max_degree: usize) -> u128 {
    let ev = (d * (sig.p() + sig.q())) as u128;
    let od = (d * sig.n()) as u128;
    let mut total = 0u128;
    for deg in 0..=max_degree as u128 {
        for e in 0..=od.min(deg) {
            let rest = deg - e;
            let even = if ev == 0 {
                u128::from(rest == 0)
            } else {
                binomial(rest + ev - 1, ev - 1)
            };
            total += binomial(od, e) * even;
        }
    }
    total
}

/// One joint highest weight found in the truncated space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HowePair {
    /// The gl_d highest weight.
    pub gld_weight: Vec<i64>,
    /// The gl(p+q|n) highest weight read off the joint weight space.
    pub flat: Weight,
    pub degree: usize,
    /// Dimension of the joint singular space.
    pub multiplicity: usize,
    /// λ♭ of `gld_weight`, when that is an admissible generalized partition.
    pub expected: Option<Weight>,
    /// A spanning singular vector when `multiplicity == 1`.
    pub vector: Option<SuperPolynomial>,
}

impl HowePair {
    pub fn partition(&self) -> Option<GeneralizedPartition> {
        GeneralizedPartition::new(self.gld_weight.clone()).ok()
    }

    /// Multiplicity one and flat = λ♭.
    pub fn verified(&self) -> bool {
        self.multiplicity == 1 && self.expected.as_ref() == Some(&self.flat)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.gld_weight,
            "flat": self.flat.to_string(),
            "degree": self.degree,
            "verified": self.verified(),
        })
    }
}

/// The outcome of [`joint_hwv`].
#[derive(Debug, Clone)]
pub struct HoweReport {
    pub d: usize,
    pub sig: Signature,
    pub max_degree: usize,
    /// Ordered by (degree, gl_d weight, flat).
    pub pairs: Vec<HowePair>,
    /// Admissible partitions whose λ♭ sits at degree ≤ max_degree but which
    /// produced no singular vector.
    pub missing: Vec<GeneralizedPartition>,
}

impl HoweReport {
    pub fn multiplicity_free(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.pairs.iter().all(|p| p.multiplicity == 1 && seen.insert(p.gld_weight.clone()))
    }

    pub fn verified(&self) -> bool {
        self.missing.is_empty() && self.multiplicity_free() && self.pairs.iter().all(HowePair::verified)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.pairs.iter().map(HowePair::to_json).collect())
    }
}

/// Total degree of the joint highest weight vector with gl(p+q|n) weight `flat`.
fn flat_degree(d: usize, sig: Signature, flat: &Weight) -> Option<usize> {
    let p = sig.p();
    let mut deg: i64 = 0;
    for (c, v) in flat.entries().enumerate() {
        let v = crate::rational::to_i64(v)?;
        deg += if c < p { -v - d as i64 } else { v };
    }
    usize::try_from(deg).ok()
}

fn generalized_partitions(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(d: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            cur.push(v);
            go(d, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Joint highest weight vectors of gl_d × gl(p+q|n) in degrees ≤ `max_degree`.
///
/// A joint weight fixes the multidegree in every column, hence the total
/// degree, so each joint weight space is finite and the raising-operator
/// kernels are computed exactly on it.
pub fn joint_hwv(d: usize, sig: Signature, max_degree: usize) -> Result<HoweReport> {
    let osc = Oscillator::new(d, sig)?;
    let raising: Vec<Operator> = osc
        .raising()
        .into_iter()
        .map(|g| osc.operator(g))
        .collect::<Result<_>>()?;

    let mut blocks: BTreeMap<(usize, Vec<i64>, Vec<i64>), Vec<OscMonomial>> = BTreeMap::new();
    for deg in 0..=max_degree {
        for m in osc.monomials(deg) {
            let key = (deg, osc.gld_weight(&m), osc.gl_weight_entries(&m));
            blocks.entry(key).or_default().push(m);
        }
    }
    let blocks: Vec<_> = blocks.into_iter().collect();

    let pairs: Vec<HowePair> = blocks
        .par_iter()
        .filter_map(|((deg, gw, fw), basis)| {
            let kernel = singular_space(&raising, basis);
            if kernel.is_empty() {
                return None;
            }
            let flat = Weight::from_entries(sig, fw.iter().copied().map(int).collect()).expect("shape");
            let expected = GeneralizedPartition::new(gw.clone())
                .ok()
                .and_then(|lam| lambda_flat(&lam, d, sig).ok());
            let vector = (kernel.len() == 1).then(|| {
                let map = basis.iter().cloned().zip(kernel[0].iter().cloned()).collect();
                SuperPolynomial::from_map(map).normalized()
            });
            Some(HowePair {
                gld_weight: gw.clone(),
                flat,
                degree: *deg,
                multiplicity: kernel.len(),
                expected,
                vector,
            })
        })
        .collect();

    let bound = max_degree as i64;
    let missing = generalized_partitions(d, -bound, bound)
        .into_iter()
        .filter_map(|parts| {
            let lam = GeneralizedPartition::new(parts.clone()).ok()?;
            let flat = lambda_flat(&lam, d, sig).ok()?;
            let deg = flat_degree(d, sig, &flat)?;
            (deg <= max_degree && !pairs.iter().any(|p| p.gld_weight == parts)).then_some(lam)
        })
        .collect();

    Ok(HoweReport {
        d,
        sig,
        max_degree,
        pairs,
        missing,
    })
}

/// Kernel of all `ops` on span(`basis`), as coefficient vectors.
fn singular_space(ops: &[Operator], basis: &[OscMonomial]) -> Vec<Vec<Rational>> {
    let ncols = basis.len();
    let mut rows: BTreeMap<(usize, OscMonomial), Vec<Rational>> = BTreeMap::new();
    for (col, m) in basis.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            let mut image = BTreeMap::new();
            op.apply_monomial(m, &Rational::one(), &mut image);
            for (t, c) in image {
                if c.is_zero() {
                    continue;
                }
                let row = rows.entry((k, t)).or_insert_with(|| vec![Rational::zero(); ncols]);
                row[col] += c;
            }
        }
    }
    let rows: Vec<Vec<Rational>> = rows.into_values().collect();
    nullspace(&rows, ncols)
}

/// The first failure of [ρ(g), ρ(h)] = ρ([g, h]) on `f`, if any.
fn commutator_defect(osc: &Oscillator, ops: &BTreeMap<Generator, Operator>, g: Generator, h: Generator, f: &SuperPolynomial) -> Option<String> {
    let (og, oh) = (&ops[&g], &ops[&h]);
    let gh = og.apply(&oh.apply(f));
    let hg = oh.apply(&og.apply(f));
    let lhs = if osc.parity(g) * osc.parity(h) == 1 {
        gh.add(&hg)
    } else {
        gh.sub(&hg)
    };
    let mut rhs = SuperPolynomial::zero();
    for (k, t) in osc.bracket(g, h) {
        rhs = rhs.add(&ops[&t].apply(f).scale(&int(k)));
    }
    (lhs != rhs).then(|| format!("[{g}, {h}] fails on {f:?}"))
}

fn operator_table(osc: &Oscillator) -> Result<BTreeMap<Generator, Operator>> {
    osc.generators()
        .into_iter()
        .map(|g| Ok((g, osc.operator(g)?)))
        .collect()
}

/// Exhaustive check of the commutation relations on every ordered pair of
/// basis generators and every monomial of degree ≤ `max_degree`.
/// Returns the first failure.
pub fn commutation_exhaustive(d: usize, sig: Signature, max_degree: usize) -> Result<Option<String>> {
    let osc = Oscillator::new(d, sig)?;
    let ops = operator_table(&osc)?;
    let gens = osc.generators();
    let monos: Vec<SuperPolynomial> = osc
        .monomials_up_to(max_degree)
        .into_iter()
        .map(SuperPolynomial::monomial)
        .collect();
    let pairs: Vec<(Generator, Generator)> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, &g)| gens[i..].iter().map(move |&h| (g, h)))
        .collect();
    Ok(pairs
        .par_iter()
        .find_map_first(|&(g, h)| monos.iter().find_map(|f| commutator_defect(&osc, &ops, g, h, f))))
}

/// Random pairs of generators on random monomials of degree ≤ `max_degree`.
pub fn commutation_fuzz(d: usize, sig: Signature, samples: usize, max_degree: usize) -> Result<bool> {
    commutation_fuzz_seeded(d, sig, samples, max_degree, 0)
}

pub fn commutation_fuzz_seeded(d: usize, sig: Signature, samples: usize, max_degree: usize, seed: u64) -> Result<bool> {
    let osc = Oscillator::new(d, sig)?;
    let ops = operator_table(&osc)?;
    let gens = osc.generators();
    let monos = osc.monomials_up_to(max_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let g = gens[rng.gen_range(0..gens.len())];
        let h = gens[rng.gen_range(0..gens.len())];
        let f = SuperPolynomial::monomial(monos[rng.gen_range(0..monos.len())].clone());
        if commutator_defect(&osc, &ops, g, h, &f).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ⟨ρ(X)f, g⟩ = ⟨f, ρ(σX)g⟩ for every generator X and all monomials f, g of
/// degree ≤ 3.
pub fn psi_sigma_check(d: usize, sig: Signature) -> Result<bool> {
    Ok(psi_sigma_defect(d, sig, 3)?.is_none())
}

/// The first generator and monomial pair violating the adjunction, if any.
pub fn psi_sigma_defect(d: usize, sig: Signature, max_degree: usize) -> Result<Option<String>> {
    let osc = Oscillator::new(d, sig)?;
    let monos = osc.monomials_up_to(max_degree);
    let set: std::collections::BTreeSet<&OscMonomial> = monos.iter().collect();
    for g in osc.generators() {
        let op = osc.operator(g)?;
        let (sign, sg) = osc.sigma(g);
        let adj = osc.operator(sg)?;
        for f in &monos {
            let lhs_poly = op.apply(&SuperPolynomial::monomial(f.clone()));
            // every g' with ⟨ρ(X)f, g'⟩ ≠ 0 must see the same value from the other side
            for (t, c) in lhs_poly.terms() {
                let rhs = adj.apply(&SuperPolynomial::monomial(t.clone())).coeff(f) * int(sign) * f.norm();
                if c * t.norm() != rhs {
                    return Ok(Some(format!("{g} at f={f:?}, g={t:?}")));
                }
            }
            // and conversely for g' inside the window with zero left side
            for t in set.iter().filter(|t| lhs_poly.coeff(t).is_zero()) {
                let rhs = adj.apply(&SuperPolynomial::monomial((*t).clone())).coeff(f);
                if !rhs.is_zero() {
                    return Ok(Some(format!("{g} at f={f:?}, g={t:?}")));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn sig(p: usize, q: usize, n: usize) -> Signature {
        Signature::new(p, q, n).unwrap()
    }

    fn poly(m: OscMonomial) -> SuperPolynomial {
        SuperPolynomial::monomial(m)
    }

    #[test]
    fn gld_examples() {
        let osc = Oscillator::new(1, sig(1, 1, 1)).unwrap();
        let x = poly(osc.x(1, 1).unwrap());
        let y = poly(osc.y(1, 1).unwrap());
        assert_eq!(osc.act_gld(1, 1, &x).unwrap(), x);
        assert_eq!(osc.act_gld(1, 1, &y).unwrap(), y.scale(&int(-1)));
        let osc2 = Oscillator::new(2, sig(1, 1, 1)).unwrap();
        let one = poly(osc2.one());
        assert!(osc2.act_gld(1, 2, &one).unwrap().is_zero());
        assert!(osc2.act_gld(2, 1, &one).unwrap().is_zero());
        assert!(matches!(osc2.act_gld(3, 1, &one), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn gl_examples() {
        let s = sig(1, 1, 1);
        let osc = Oscillator::new(1, s).unwrap();
        let one = poly(osc.one());
        let e = |a, b| MatrixUnit::new(s, a, b).unwrap();
        assert_eq!(osc.act_gl(e(1, 1), &one).unwrap(), one.scale(&int(-1)));
        let a = osc.act_gl(e(1, 2), &osc.act_gl(e(2, 1), &one).unwrap()).unwrap();
        let b = osc.act_gl(e(2, 1), &osc.act_gl(e(1, 2), &one).unwrap()).unwrap();
        let h = osc.act_gl(e(1, 1), &one).unwrap().sub(&osc.act_gl(e(2, 2), &one).unwrap());
        assert_eq!(a.sub(&b), one.scale(&int(-1)));
        assert_eq!(a.sub(&b), h);
        let eta = poly(osc.eta(1, 1).unwrap());
        let x = poly(osc.x(1, 1).unwrap());
        assert_eq!(osc.act_gl(e(2, 3), &eta).unwrap(), x);
        // ρ(E_{p+k,j}) is multiplication by −x y
        let xy = x.mul(&poly(osc.y(1, 1).unwrap()));
        assert_eq!(osc.act_gl(e(2, 1), &one).unwrap(), xy.scale(&int(-1)));
    }

    #[test]
    fn herm_examples() {
        let osc = Oscillator::new(1, sig(1, 1, 1)).unwrap();
        let one = poly(osc.one());
        let x = poly(osc.x(1, 1).unwrap());
        let y = poly(osc.y(1, 1).unwrap());
        assert_eq!(herm(&one, &one), int(1));
        let x2 = x.mul(&x);
        assert_eq!(herm(&x2, &x2), int(2));
        assert_eq!(herm(&x, &y), int(0));
        let f = x2.add(&y.scale(&frac(1, 2)));
        assert_eq!(herm(&f, &f), int(2) + frac(1, 4));
    }

    #[test]
    fn herm_defining_property() {
        // ⟨z g, h⟩ = ⟨g, ∂_z h⟩ for each variable z
        let s = sig(1, 1, 2);
        let osc = Oscillator::new(2, s).unwrap();
        let monos = osc.monomials_up_to(3);
        let mut vars = Vec::new();
        for a in 1..=2 {
            vars.push((osc.x(a, 1).unwrap(), Prim::Diff(Var::X(osc.xi(a, 1)))));
            vars.push((osc.y(a, 1).unwrap(), Prim::Diff(Var::Y(osc.yi(a, 1)))));
            for mu in 1..=2 {
                vars.push((osc.eta(a, mu).unwrap(), Prim::Diff(Var::Eta(osc.ei(a, mu)))));
            }
        }
        for (z, dz) in vars {
            for g in monos.iter().filter(|m| m.degree() <= 2) {
                for h in &monos {
                    let lhs = herm(&poly(z.clone()).mul(&poly(g.clone())), &poly(h.clone()));
                    let mut hh = h.clone();
                    let rhs = match apply_prim(dz, &mut hh) {
                        Some(k) => herm(&poly(g.clone()), &poly(hh)) * int(k),
                        None => int(0),
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn odd_variables_anticommute() {
        let osc = Oscillator::new(2, sig(1, 1, 1)).unwrap();
        let a = poly(osc.eta(1, 1).unwrap());
        let b = poly(osc.eta(2, 1).unwrap());
        assert_eq!(a.mul(&b), b.mul(&a).scale(&int(-1)));
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn monomial_counts_match_enumeration() {
        for (d, s, k) in [(1, sig(1, 1, 1), 4), (2, sig(2, 1, 2), 3), (2, sig(1, 0, 2), 4)] {
            let osc = Oscillator::new(d, s).unwrap();
            assert_eq!(osc.monomials_up_to(k).len() as u128, monomial_count(d, s, k));
        }
    }

    #[test]
    fn cartan_acts_by_weights() {
        let s = sig(2, 1, 2);
        let osc = Oscillator::new(2, s).unwrap();
        for m in osc.monomials_up_to(3) {
            let f = poly(m.clone());
            let gw = osc.gld_weight(&m);
            let mut trace = SuperPolynomial::zero();
            for a in 1..=2 {
                let img = osc.act_gld(a, a, &f).unwrap();
                assert_eq!(img, f.scale(&int(gw[a - 1])));
                trace = trace.add(&img);
            }
            let xs: u32 = m.xexp.iter().sum();
            let ys: u32 = m.yexp.iter().sum();
            let count = i64::from(xs) + i64::from(m.eta.count_ones()) - i64::from(ys);
            assert_eq!(trace, f.scale(&int(count)));
            let fw = osc.gl_weight_entries(&m);
            for c in 1..=s.dim() {
                let img = osc.act_gl(MatrixUnit::new(s, c, c).unwrap(), &f).unwrap();
                assert_eq!(img, f.scale(&int(fw[c - 1])));
            }
        }
    }

    #[test]
    fn commutation_small() {
        assert_eq!(commutation_exhaustive(1, sig(1, 1, 1), 3).unwrap(), None);
        assert_eq!(commutation_exhaustive(2, sig(1, 1, 1), 2).unwrap(), None);
        assert!(commutation_fuzz(2, sig(2, 1, 2), 300, 3).unwrap());
    }

    #[test]
    fn cartan_pairs_commute() {
        let s = sig(1, 2, 1);
        let osc = Oscillator::new(2, s).unwrap();
        let ops = operator_table(&osc).unwrap();
        for f in osc.monomials_up_to(2).into_iter().map(poly) {
            for a in 1..=2 {
                for c in 1..=s.dim() {
                    assert!(commutator_defect(&osc, &ops, Generator::Gld(a, a), Generator::Gl(c, c), &f).is_none());
                }
            }
        }
    }

    #[test]
    fn adjunction() {
        assert!(psi_sigma_check(1, sig(1, 1, 1)).unwrap());
        assert!(psi_sigma_check(2, sig(1, 1, 1)).unwrap());
        assert_eq!(psi_sigma_defect(1, sig(2, 1, 2), 2).unwrap(), None);
    }

    #[test]
    fn adjunction_examples() {
        let s = sig(1, 1, 1);
        let osc = Oscillator::new(1, s).unwrap();
        // σ(E_13) = −E_31
        assert_eq!(osc.sigma(Generator::Gl(1, 3)), (-1, Generator::Gl(3, 1)));
        let eta = poly(osc.eta(1, 1).unwrap());
        let one = poly(osc.one());
        let e13 = osc.act(Generator::Gl(1, 3), &eta.mul(&poly(osc.y(1, 1).unwrap()))).unwrap();
        let e31 = osc.act(Generator::Gl(3, 1), &one).unwrap().scale(&int(-1));
        assert_eq!(herm(&e13, &one), herm(&eta.mul(&poly(osc.y(1, 1).unwrap())), &e31));
        let osc2 = Oscillator::new(2, s).unwrap();
        assert_eq!(osc2.sigma(Generator::Gld(1, 2)), (1, Generator::Gld(2, 1)));
    }

    #[test]
    fn joint_hwv_degree_zero() {
        for d in 1..=2 {
            let s = sig(1, 1, 1);
            let r = joint_hwv(d, s, 0).unwrap();
            assert_eq!(r.pairs.len(), 1);
            let pair = &r.pairs[0];
            assert_eq!(pair.gld_weight, vec![0; d]);
            let zero = GeneralizedPartition::new(vec![0; d]).unwrap();
            assert_eq!(pair.flat, lambda_flat(&zero, d, s).unwrap());
            assert_eq!(pair.vector, Some(poly(Oscillator::new(d, s).unwrap().one())));
            assert!(r.verified());
        }
    }

    #[test]
    fn joint_hwv_degree_one_x() {
        let s = sig(1, 1, 1);
        let r = joint_hwv(1, s, 1).unwrap();
        let osc = Oscillator::new(1, s).unwrap();
        let pair = r.pairs.iter().find(|p| p.gld_weight == vec![1]).unwrap();
        assert_eq!(pair.vector, Some(poly(osc.x(1, 1).unwrap())));
        let lam = GeneralizedPartition::new(vec![1]).unwrap();
        assert_eq!(pair.flat, lambda_flat(&lam, 1, s).unwrap());
        assert!(r.verified());
    }

    #[test]
    fn joint_hwv_two_zero() {
        let s = sig(1, 1, 1);
        let r = joint_hwv(2, s, 2).unwrap();
        assert!(r.verified(), "{r:?}");
        let pair = r.pairs.iter().find(|p| p.gld_weight == vec![2, 0]).unwrap();
        assert_eq!(pair.flat, Weight::from_ints(s, &[-2, 2], &[0]).unwrap());
    }

    #[test]
    fn joint_hwv_small_sweep() {
        for (d, s, k) in [(1, sig(1, 1, 1), 4), (2, sig(1, 1, 1), 3), (1, sig(1, 1, 2), 3), (2, sig(1, 2, 1), 3)] {
            let r = joint_hwv(d, s, k).unwrap();
            assert!(r.verified(), "{d} {s} {:?}", r.missing);
        }
    }
}
