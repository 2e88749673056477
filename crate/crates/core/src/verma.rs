//! Weight spaces of the Verma module M(Λ) for the standard Borel of gl(p+q|n),
//! the contravariant form for the u(p,q|n) star, and exact positivity checks.
//!
//! Vectors are combinations of normal-ordered monomials in the lowering
//! generators E_ba (b > a), sorted by (b, a), applied to v_Λ.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, int, Rational};
use crate::superalgebra::{bracket_terms, Frame};
use crate::superweights::{bilinear, dominance_violation, rho_for, Signature, Weight};

type Mono = Vec<u8>;
type Terms = Vec<(Mono, Rational)>;

/// Exponents of the lowering generators, in PBW order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoweringMonomial {
    exps: Mono,
}

impl LoweringMonomial {
    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }
    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// A combination of PBW monomials applied to the highest weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VermaVector {
    terms: BTreeMap<Mono, Rational>,
}

impl VermaVector {
    pub fn monomial(m: &LoweringMonomial) -> Self {
        let mut t = BTreeMap::new();
        t.insert(m.exps.clone(), Rational::one());
        Self { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &LoweringMonomial) -> Rational {
        self.terms.get(&m.exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (LoweringMonomial, &Rational)> {
        self.terms
            .iter()
            .map(|(m, c)| (LoweringMonomial { exps: m.clone() }, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::default();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }
}

/// Drops β = Σ c_k α_k over simple roots with Σ c_k ≤ `max_height`, sorted by
/// height and then by their ε/δ coordinates.
pub fn enumerate_drops(sig: Signature, max_height: usize) -> Vec<Weight> {
    let r = sig.dim() - 1;
    let mut out: Vec<(usize, Weight)> = Vec::new();
    let mut c = vec![0usize; r];
    fn rec(sig: Signature, c: &mut Vec<usize>, k: usize, budget: usize, out: &mut Vec<(usize, Weight)>) {
        if k == c.len() {
            let mut w = Weight::zero(sig);
            let mut h = 0;
            for (idx, &ck) in c.iter().enumerate() {
                if ck > 0 {
                    w = w + Weight::root(sig, idx + 1, idx + 2).expect("simple root").scale(&int(ck as i64));
                    h += ck;
                }
            }
            out.push((h, w));
            return;
        }
        for v in 0..=budget {
            c[k] = v;
            rec(sig, c, k + 1, budget - v, out);
        }
        c[k] = 0;
    }
    rec(sig, &mut c, 0, max_height, &mut out);
    out.sort_by(|(h1, a), (h2, b)| h1.cmp(h2).then_with(|| a.entries().cmp(b.entries())));
    out.into_iter().map(|(_, w)| w).collect()
}

/// Simple-root coordinates of a drop, or an error if it is not in the positive cone.
pub fn simple_coordinates(drop: &Weight) -> Result<Vec<usize>> {
    let sig = drop.sig();
    let mut acc = Rational::zero();
    let mut out = Vec::with_capacity(sig.dim() - 1);
    for a in 1..=sig.dim() {
        acc += drop.entry(a);
        if a < sig.dim() {
            if !acc.is_integer() || acc.is_negative() {
                return Err(Error::InvalidDrop(drop.to_string()));
            }
            out.push(acc.to_integer().try_into().map_err(|_| Error::InvalidDrop(drop.to_string()))?);
        }
    }
    if !acc.is_zero() {
        return Err(Error::InvalidDrop(drop.to_string()));
    }
    Ok(out)
}

/// Height of a drop in simple roots.
pub fn drop_height(drop: &Weight) -> Result<usize> {
    Ok(simple_coordinates(drop)?.iter().sum())
}

/// Text label such as `eps1-delta1` or `2eps1-eps2-delta1`.
pub fn drop_label(drop: &Weight) -> String {
    let sig = drop.sig();
    let m = sig.m();
    let mut s = String::new();
    for a in 1..=sig.dim() {
        let c = drop.entry(a);
        if c.is_zero() {
            continue;
        }
        let name = if a <= m {
            format!("eps{a}")
        } else {
            format!("delta{}", a - m)
        };
        let mag = c.abs();
        let coef = if mag.is_one() {
            String::new()
        } else {
            rational::format(&mag)
        };
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        s.push_str(&coef);
        s.push_str(&name);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// The Verma module M(Λ) with memoized straightening.
pub struct VermaModule {
    hw: Weight,
    frame: Frame,
    gens: Vec<(usize, usize)>,
    gen_index: HashMap<(usize, usize), usize>,
    odd: Vec<bool>,
    lmul_memo: RefCell<HashMap<(usize, Mono), Rc<Terms>>>,
    act_memo: RefCell<HashMap<((usize, usize), Mono), Rc<Terms>>>,
}

impl VermaModule {
    pub fn new(hw: &Weight) -> Result<Self> {
        if let Some(why) = dominance_violation(hw) {
            return Err(Error::NotDominant(why));
        }
        let sig = hw.sig();
        let frame = Frame::Gl(sig);
        let d = sig.dim();
        let mut gens = Vec::new();
        for b in 1..=d {
            for a in 1..b {
                gens.push((b, a));
            }
        }
        let gen_index = gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let odd = gens
            .iter()
            .map(|&(b, a)| (frame.parity(a) + frame.parity(b)) % 2 == 1)
            .collect();
        Ok(Self {
            hw: hw.clone(),
            frame,
            gens,
            gen_index,
            odd,
            lmul_memo: RefCell::new(HashMap::new()),
            act_memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn hw(&self) -> &Weight {
        &self.hw
    }

    pub fn sig(&self) -> Signature {
        self.hw.sig()
    }

    /// Lowering generators (b, a), b > a, in PBW order.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.gens
    }

    fn empty(&self) -> Mono {
        vec![0; self.gens.len()]
    }

    /// PBW monomials of total drop `drop`.
    pub fn weight_space_basis(&self, drop: &Weight) -> Result<Vec<LoweringMonomial>> {
        if !drop.sig().same_shape(&self.sig()) {
            return Err(Error::InvalidDrop(drop.to_string()));
        }
        let target = simple_coordinates(drop)?;
        let mut out = Vec::new();
        let mut cur = self.empty();
        let mut rem = target;
        self.basis_rec(0, &mut cur, &mut rem, &mut out);
        out.sort();
        Ok(out.into_iter().map(|exps| LoweringMonomial { exps }).collect())
    }

    fn basis_rec(&self, g: usize, cur: &mut Mono, rem: &mut Vec<usize>, out: &mut Vec<Mono>) {
        if g == self.gens.len() {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let (b, a) = self.gens[g];
        // E_ba lowers by α_a + … + α_{b−1}
        let cap = (a..b).map(|k| rem[k - 1]).min().unwrap_or(0);
        let cap = if self.odd[g] { cap.min(1) } else { cap };
        for e in 0..=cap {
            for k in a..b {
                rem[k - 1] -= e;
            }
            cur[g] = e as u8;
            self.basis_rec(g + 1, cur, rem, out);
            for k in a..b {
                rem[k - 1] += e;
            }
        }
        cur[g] = 0;
    }

    fn first(m: &Mono) -> Option<usize> {
        m.iter().position(|&e| e > 0)
    }

    fn sign(&self, x_odd: bool, y_odd: bool) -> Rational {
        if x_odd && y_odd {
            int(-1)
        } else {
            int(1)
        }
    }

    fn accumulate(acc: &mut HashMap<Mono, Rational>, m: &Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = acc.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
    }

    fn finish(acc: HashMap<Mono, Rational>) -> Rc<Terms> {
        let mut v: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Rc::new(v)
    }

    /// g_t · M, normal ordered.
    fn lmul(&self, t: usize, m: &Mono) -> Rc<Terms> {
        if let Some(hit) = self.lmul_memo.borrow().get(&(t, m.clone())) {
            return hit.clone();
        }
        let out = match Self::first(m) {
            None => {
                let mut n = m.clone();
                n[t] = 1;
                Rc::new(vec![(n, Rational::one())])
            }
            Some(k) if t < k => {
                let mut n = m.clone();
                n[t] += 1;
                Rc::new(vec![(n, Rational::one())])
            }
            Some(k) if t == k => {
                if self.odd[t] {
                    Rc::new(Vec::new())
                } else {
                    let mut n = m.clone();
                    n[t] += 1;
                    Rc::new(vec![(n, Rational::one())])
                }
            }
            Some(k) => {
                let mut r = m.clone();
                r[k] -= 1;
                let sign = self.sign(self.odd[t], self.odd[k]);
                let mut acc = HashMap::new();
                for (mono, c) in self.lmul(t, &r).iter() {
                    for (mono2, c2) in self.lmul(k, mono).iter() {
                        Self::accumulate(&mut acc, mono2, &sign * c * c2);
                    }
                }
                for (row, col, coef) in bracket_terms(self.frame, self.gens[t], self.gens[k]) {
                    let idx = self.gen_index[&(row, col)];
                    for (mono, c) in self.lmul(idx, &r).iter() {
                        Self::accumulate(&mut acc, mono, c * int(coef));
                    }
                }
                Self::finish(acc)
            }
        };
        self.lmul_memo.borrow_mut().insert((t, m.clone()), out.clone());
        out
    }

    /// Coordinates of the weight drop of a monomial, indexed 1..=m+n.
    fn drop_of(&self, m: &Mono) -> Vec<i64> {
        let mut d = vec![0i64; self.sig().dim() + 1];
        for (g, &e) in m.iter().enumerate() {
            if e > 0 {
                let (b, a) = self.gens[g];
                d[a] += e as i64;
                d[b] -= e as i64;
            }
        }
        d
    }

    fn apply_unit_mono(&self, unit: (usize, usize), m: &Mono) -> Rc<Terms> {
        let (x, y) = unit;
        if x > y {
            self.lmul(self.gen_index[&unit], m)
        } else {
            self.act(unit, m)
        }
    }

    /// Raising or Cartan unit E_xy (x ≤ y) applied to M·v_Λ.
    fn act(&self, unit: (usize, usize), m: &Mono) -> Rc<Terms> {
        let (x, y) = unit;
        if x == y {
            let eig = self.hw.entry(x) - int(self.drop_of(m)[x]);
            return if eig.is_zero() {
                Rc::new(Vec::new())
            } else {
                Rc::new(vec![(m.clone(), eig)])
            };
        }
        let Some(k) = Self::first(m) else {
            return Rc::new(Vec::new());
        };
        if let Some(hit) = self.act_memo.borrow().get(&(unit, m.clone())) {
            return hit.clone();
        }
        let mut r = m.clone();
        r[k] -= 1;
        let x_odd = (self.frame.parity(x) + self.frame.parity(y)) % 2 == 1;
        let sign = self.sign(x_odd, self.odd[k]);
        let mut acc = HashMap::new();
        for (mono, c) in self.act(unit, &r).iter() {
            for (mono2, c2) in self.lmul(k, mono).iter() {
                Self::accumulate(&mut acc, mono2, &sign * c * c2);
            }
        }
        for (row, col, coef) in bracket_terms(self.frame, unit, self.gens[k]) {
            for (mono, c) in self.apply_unit_mono((row, col), &r).iter() {
                Self::accumulate(&mut acc, mono, c * int(coef));
            }
        }
        let out = Self::finish(acc);
        self.act_memo.borrow_mut().insert((unit, m.clone()), out.clone());
        out
    }

    /// E_ab · v for any matrix unit.
    pub fn apply(&self, a: usize, b: usize, v: &VermaVector) -> Result<VermaVector> {
        let d = self.sig().dim();
        if a == 0 || b == 0 || a > d || b > d {
            return Err(Error::IndexOutOfRange(format!("E[{a},{b}]")));
        }
        let mut out = VermaVector::default();
        for (m, c) in &v.terms {
            for (m2, c2) in self.apply_unit_mono((a, b), m).iter() {
                out.add_term(m2.clone(), c * c2);
            }
        }
        Ok(out)
    }

    /// The action of a raising or Cartan unit E_ab (a ≤ b), or any other unit.
    pub fn raise(&self, a: usize, b: usize, v: &VermaVector) -> Result<VermaVector> {
        self.apply(a, b, v)
    }

    /// E_ab* = s(a)s(b)E_ba as (sign, row, col).
    fn star_unit(&self, (b, a): (usize, usize)) -> (i64, usize, usize) {
        let neg = |c: usize| self.frame.star_negative(c);
        let s = if neg(a) == neg(b) { 1 } else { -1 };
        (s, a, b)
    }

    /// ⟨F_I v_Λ, w⟩ for a monomial F_I.
    fn pair_monomial(&self, left: &Mono, w: &VermaVector) -> Rational {
        let mut cur = w.clone();
        for (g, &e) in left.iter().enumerate() {
            for _ in 0..e {
                let (s, a, b) = self.star_unit(self.gens[g]);
                let mut next = VermaVector::default();
                for (m, c) in &cur.terms {
                    for (m2, c2) in self.act((a, b), m).iter() {
                        next.add_term(m2.clone(), c * c2 * int(s));
                    }
                }
                cur = next;
                if cur.is_zero() {
                    return Rational::zero();
                }
            }
        }
        cur.terms.get(&self.empty()).cloned().unwrap_or_else(Rational::zero)
    }

    /// The contravariant form ⟨u, w⟩ with ⟨v_Λ, v_Λ⟩ = 1.
    pub fn inner(&self, u: &VermaVector, w: &VermaVector) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &u.terms {
            total += c * self.pair_monomial(m, w);
        }
        total
    }

    /// Embeds the highest weight vector with the right exponent length.
    pub fn hw_vector(&self) -> VermaVector {
        let mut t = BTreeMap::new();
        t.insert(self.empty(), Rational::one());
        VermaVector { terms: t }
    }

    pub fn gram_matrix(&self, basis: &[LoweringMonomial]) -> Result<Matrix> {
        let mut mat = vec![vec![Rational::zero(); basis.len()]; basis.len()];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                mat[i][j] = self.pair_monomial(&bi.exps, &VermaVector::monomial(bj));
            }
        }
        linalg::check_symmetric(&mat)?;
        Ok(mat)
    }

    pub fn gram(&self, drop: &Weight) -> Result<GramReport> {
        let basis = self.weight_space_basis(drop)?;
        let matrix = self.gram_matrix(&basis)?;
        let verdict = linalg::psd_exact(&matrix)?;
        Ok(GramReport {
            hw: self.hw.clone(),
            drop: drop.clone(),
            basis,
            matrix,
            psd: verdict.psd,
            witness: verdict.witness,
        })
    }

    pub fn certify(&self, max_height: usize) -> Result<Certificate> {
        let mut reports = Vec::new();
        for drop in enumerate_drops(self.sig(), max_height) {
            let rep = self.gram(&drop)?;
            let bad = !rep.psd;
            reports.push(rep);
            if bad {
                return Ok(Certificate {
                    verdict: CertVerdict::NegativeWitness,
                    reports,
                });
            }
        }
        Ok(Certificate {
            verdict: CertVerdict::PsdUpToCap,
            reports,
        })
    }

    /// Vectors in the drop weight space killed by every compact raising unit.
    pub fn k_singular(&self, drop: &Weight) -> Result<Vec<VermaVector>> {
        let basis = self.weight_space_basis(drop)?;
        let sig = self.sig();
        let (p, d) = (sig.p(), sig.dim());
        let compact = |a: usize, b: usize| (a <= p && b <= p) || (a > p && b > p);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for a in 1..=d {
            for b in a + 1..=d {
                if !compact(a, b) {
                    continue;
                }
                let images: Vec<VermaVector> = basis
                    .iter()
                    .map(|m| self.apply(a, b, &VermaVector::monomial(m)))
                    .collect::<Result<_>>()?;
                let mut targets: BTreeMap<Mono, usize> = BTreeMap::new();
                for img in &images {
                    for m in img.terms.keys() {
                        let next = targets.len();
                        targets.entry(m.clone()).or_insert(next);
                    }
                }
                let mut block = vec![vec![Rational::zero(); basis.len()]; targets.len()];
                for (col, img) in images.iter().enumerate() {
                    for (m, c) in &img.terms {
                        block[targets[m]][col] = c.clone();
                    }
                }
                rows.extend(block);
            }
        }
        let ns = linalg::nullspace(&rows, basis.len());
        Ok(ns
            .into_iter()
            .map(|v| {
                let mut out = VermaVector::default();
                for (c, m) in v.into_iter().zip(&basis) {
                    out.add_term(m.exps.clone(), c);
                }
                out
            })
            .collect())
    }

    /// Γ = Σ_{i ≤ p < a} E_ai E_ia.
    pub fn gamma_operator(&self, v: &VermaVector) -> Result<VermaVector> {
        let sig = self.sig();
        let mut out = VermaVector::default();
        for i in 1..=sig.p() {
            for a in sig.p() + 1..=sig.dim() {
                let up = self.apply(i, a, v)?;
                out = out.add(&self.apply(a, i, &up)?);
            }
        }
        Ok(out)
    }

    /// Γ acts on every k-singular vector of the drop space by γ(Λ, drop).
    pub fn gamma_action_check(&self, drop: &Weight) -> Result<bool> {
        let theta = drop;
        let shifted = &self.hw + &rho_for(self.sig());
        let gamma = bilinear(&shifted, theta)? - bilinear(theta, theta)? / int(2);
        for v in self.k_singular(drop)? {
            if self.gamma_operator(&v)? != v.scale(&gamma) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn format_monomial(&self, m: &LoweringMonomial) -> String {
        let mut s = String::new();
        for (g, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (b, a) = self.gens[g];
            s.push_str(&format!("E[{b},{a}]"));
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

impl fmt::Debug for VermaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VermaModule").field("hw", &self.hw).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub hw: Weight,
    pub drop: Weight,
    pub basis: Vec<LoweringMonomial>,
    pub matrix: Matrix,
    pub psd: bool,
    pub witness: Option<Vec<Rational>>,
}

impl GramReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// wᵀ G w for the stored witness.
    pub fn witness_norm(&self) -> Option<Rational> {
        self.witness.as_ref().map(|w| linalg::quad_form(&self.matrix, w))
    }

    pub fn to_json(&self) -> Value {
        let strs = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>();
        let drop: Vec<String> = strs(&self.drop.entries().cloned().collect::<Vec<_>>());
        json!({
            "drop": drop,
            "dim": self.dim(),
            "matrix": self.matrix.iter().map(|r| strs(r)).collect::<Vec<_>>(),
            "psd": self.psd,
            "witness": self.witness.as_ref().map(|w| strs(w)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertVerdict {
    PsdUpToCap,
    NegativeWitness,
}

impl fmt::Display for CertVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertVerdict::PsdUpToCap => "psd_up_to_cap",
            CertVerdict::NegativeWitness => "negative_witness",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: CertVerdict,
    pub reports: Vec<GramReport>,
}

impl Certificate {
    pub fn failing(&self) -> Option<&GramReport> {
        self.reports.iter().find(|r| !r.psd)
    }

    pub fn to_json(&self) -> Value {
        let witness = self.failing().map(|r| {
            json!({
                "drop": drop_label(&r.drop),
                "vector": r.witness.as_ref().map(|w| w.iter().map(rational::format).collect::<Vec<_>>()),
                "norm": r.witness_norm().map(|n| rational::format(&n)),
            })
        });
        json!({
            "verdict": self.verdict.to_string(),
            "witness": witness,
            "reports": self.reports.iter().map(GramReport::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn weight_space_basis(hw: &Weight, drop: &Weight) -> Result<Vec<LoweringMonomial>> {
    VermaModule::new(hw)?.weight_space_basis(drop)
}

pub fn gram(hw: &Weight, drop: &Weight) -> Result<GramReport> {
    VermaModule::new(hw)?.gram(drop)
}

pub fn certify(hw: &Weight, max_height: usize) -> Result<Certificate> {
    VermaModule::new(hw)?.certify(max_height)
}

pub fn gamma_action_check(hw: &Weight, drop: &Weight) -> Result<bool> {
    VermaModule::new(hw)?.gamma_action_check(drop)
}
