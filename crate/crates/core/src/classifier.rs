//! Unitarity tests for highest weight modules of u(p,q|n) and the related
//! finite-dimensional, integral and dual classifications.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::superweights::{
    bilinear, dominance_violation, is_dominant, is_integral, lambda_flat, rho_for, shift_scalar,
    GeneralizedPartition, Signature, SwappedWeight, ThetaShift, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    U1,
    U2,
    U3,
    U4,
    U5,
    U6,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::U1,
        Condition::U2,
        Condition::U3,
        Condition::U4,
        Condition::U5,
        Condition::U6,
    ];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Witnesses {
    pub i: Option<usize>,
    pub mu: Option<usize>,
    pub j: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub unitary: bool,
    pub condition: Option<Condition>,
    pub witnesses: Witnesses,
}

impl Witnesses {
    fn write_json(&self, obj: &mut serde_json::Map<String, Value>) {
        for (key, v) in [("i", self.i), ("mu", self.mu), ("j", self.j)] {
            if let Some(v) = v {
                obj.insert(key.into(), json!(v));
            }
        }
    }
}

impl Verdict {
    /// `{"unitary": …, "condition": "U…", "i": …, "mu": …, "j": …}`, omitting absent fields.
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("unitary".into(), json!(self.unitary));
        if let Some(c) = self.condition {
            obj.insert("condition".into(), json!(c.to_string()));
        }
        self.witnesses.write_json(&mut obj);
        Value::Object(obj)
    }

    fn no() -> Self {
        Self {
            unitary: false,
            condition: None,
            witnesses: Witnesses::default(),
        }
    }
}

/// (Λ, ε_a − ε_b) and (Λ+ρ, ε_a − ε_b) on 1-based indices over 1..=m+n.
struct Pairing<'a> {
    w: &'a Weight,
    shifted: Weight,
}

impl<'a> Pairing<'a> {
    fn new(w: &'a Weight) -> Self {
        Self {
            w,
            shifted: w + &rho_for(w.sig()),
        }
    }

    fn signed(v: &Weight, a: usize) -> Rational {
        if a > v.sig().m() {
            -v.entry(a).clone()
        } else {
            v.entry(a).clone()
        }
    }

    /// (Λ, ε_a − ε_b).
    fn l(&self, a: usize, b: usize) -> Rational {
        Self::signed(self.w, a) - Self::signed(self.w, b)
    }

    /// (Λ+ρ, ε_a − ε_b).
    fn a(&self, a: usize, b: usize) -> Rational {
        Self::signed(&self.shifted, a) - Self::signed(&self.shifted, b)
    }
}

fn require_dominant(w: &Weight) -> Result<()> {
    match dominance_violation(w) {
        Some(why) => Err(Error::NotDominant(why)),
        None => Ok(()),
    }
}

/// Every condition among U1–U6 that holds, each with its smallest witnesses.
pub fn conditions_holding(w: &Weight) -> Result<Vec<(Condition, Witnesses)>> {
    let sig = w.sig();
    sig.require_noncompact()?;
    require_dominant(w)?;
    let (p, m, n) = (sig.p(), sig.m(), sig.n());
    let pr = Pairing::new(w);
    let d1 = m + 1;
    let dn = m + n;

    let top_positive = pr.a(m, dn).is_positive();
    let bottom_negative = pr.a(1, d1).is_negative();
    let i_clause = (1..=p).find(|&i| pr.a(i, d1).is_zero() && pr.l(i, 1).is_zero());
    let mu_clause = (2..=n).find(|&mu| pr.a(m, m + mu).is_zero() && pr.l(m + mu, dn).is_zero());
    let middle = pr.a(m, d1).is_zero() && pr.l(d1, dn).is_zero();

    let mut out = Vec::new();
    let wit = |i, mu, j| Witnesses { i, mu, j };
    if top_positive && bottom_negative {
        out.push((Condition::U1, wit(None, None, None)));
    }
    if top_positive {
        if let Some(i) = i_clause {
            out.push((Condition::U2, wit(Some(i), None, None)));
        }
    }
    if bottom_negative {
        if let Some(mu) = mu_clause {
            out.push((Condition::U3, wit(None, Some(mu), None)));
        }
    }
    if let (Some(mu), Some(i)) = (mu_clause, i_clause) {
        out.push((Condition::U4, wit(Some(i), Some(mu), None)));
    }
    if middle {
        let u5 = (p..m).find(|&j| pr.l(1, d1) < int(1 - j as i64) && pr.l(j + 1, m).is_zero());
        if let Some(j) = u5 {
            out.push((Condition::U5, wit(None, None, Some(j))));
        }
        let u6 = (1..=p).find_map(|i| {
            (p..m)
                .find(|&j| {
                    pr.l(i, 1).is_zero()
                        && pr.l(j + 1, m).is_zero()
                        && pr.l(i, d1) == int(i as i64 - j as i64)
                })
                .map(|j| (i, j))
        });
        if let Some((i, j)) = u6 {
            out.push((Condition::U6, wit(Some(i), None, Some(j))));
        }
    }
    Ok(out)
}

/// Decides unitarity of L(Λ) over u(p,q|n) by the conditions U1–U6.
pub fn check_u(w: &Weight) -> Result<Verdict> {
    let holding = conditions_holding(w)?;
    Ok(match holding.first() {
        Some(&(c, wit)) => Verdict {
            unitary: true,
            condition: Some(c),
            witnesses: wit,
        },
        None => Verdict::no(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralVerdict {
    pub unitary: bool,
    pub branch: Option<Branch>,
    pub witnesses: Witnesses,
}

impl IntegralVerdict {
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("unitary".into(), json!(self.unitary));
        if let Some(b) = self.branch {
            obj.insert("branch".into(), json!(match b {
                Branch::One => 1,
                Branch::Two => 2,
            }));
        }
        self.witnesses.write_json(&mut obj);
        Value::Object(obj)
    }
}

fn equal_run(xs: &[Rational], from: usize, to: usize) -> bool {
    // 1-based inclusive
    (from..to).all(|k| xs[k - 1] == xs[k])
}

/// Smallest i ∈ 1..=p with λ_1 = … = λ_i and λ_1+ω_1 = i − offset, unless the strict clause holds.
fn lower_clause(lam: &[Rational], s: &Rational, p: usize, offset: i64) -> Option<Option<usize>> {
    if *s < int(1 - offset) {
        return Some(None);
    }
    (1..=p)
        .find(|&i| equal_run(lam, 1, i) && *s == int(i as i64 - offset))
        .map(Some)
}

/// Evaluates the two integral conditions literally.
pub fn integral_classify(w: &Weight) -> Result<IntegralVerdict> {
    let sig = w.sig();
    sig.require_noncompact()?;
    if !is_integral(w) {
        return Err(Error::NotIntegral(w.to_string()));
    }
    let (p, m, n) = (sig.p(), sig.m(), sig.n() as i64);
    let lam = w.lambda();
    let om = w.omega();
    let first = &lam[0] + &om[0];
    let last = &lam[m - 1] + &om[n as usize - 1];

    // (1)
    if let Some(i) = lower_clause(lam, &first, p, m as i64) {
        let upper = if last > int(n - 1) {
            Some(None)
        } else {
            (2..=n as usize)
                .find(|&mu| equal_run(om, mu, n as usize) && last == int(mu as i64 - 1))
                .map(Some)
        };
        if let Some(mu) = upper {
            return Ok(IntegralVerdict {
                unitary: true,
                branch: Some(Branch::One),
                witnesses: Witnesses { i, mu, j: None },
            });
        }
    }

    // (2)
    if equal_run(om, 1, n as usize) && last.is_zero() {
        for j in p..m {
            if !equal_run(lam, j + 1, m) {
                continue;
            }
            if let Some(i) = lower_clause(lam, &first, p, j as i64) {
                return Ok(IntegralVerdict {
                    unitary: true,
                    branch: Some(Branch::Two),
                    witnesses: Witnesses { i, mu: None, j: Some(j) },
                });
            }
        }
    }
    Ok(IntegralVerdict {
        unitary: false,
        branch: None,
        witnesses: Witnesses::default(),
    })
}

/// Dominance for gl_m ⊕ gl_n, ignoring the p/q split.
fn require_finite_dominant(w: &Weight) -> Result<Weight> {
    let sig = Signature::gl(w.sig().m(), w.sig().n())?;
    let full = w.with_signature(sig)?;
    require_dominant(&full)?;
    Ok(full)
}

/// Outcome of the type-1 test on a gl(m|n) weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeOneBranches {
    /// (Λ+ρ, ε_m − δ_n) > 0.
    pub typical: bool,
    /// Every μ with (Λ+ρ, ε_m − δ_μ) = (Λ, δ_μ − δ_n) = 0.
    pub atypical: Vec<usize>,
}

pub fn type1_branches(w: &Weight) -> Result<TypeOneBranches> {
    let full = require_finite_dominant(w)?;
    let (m, n) = (full.sig().m(), full.sig().n());
    if n == 0 {
        return Ok(TypeOneBranches {
            typical: true,
            atypical: Vec::new(),
        });
    }
    let pr = Pairing::new(&full);
    Ok(TypeOneBranches {
        typical: pr.a(m, m + n).is_positive(),
        atypical: (1..=n)
            .filter(|&mu| pr.a(m, m + mu).is_zero() && pr.l(m + mu, m + n).is_zero())
            .collect(),
    })
}

/// Type-1 unitarity of the finite-dimensional gl(m|n)-module L(Λ).
///
/// With n = 0 every dominant weight qualifies.
pub fn type1_finite(w: &Weight) -> Result<bool> {
    let b = type1_branches(w)?;
    Ok(b.typical || !b.atypical.is_empty())
}

/// Type-2 unitarity of the finite-dimensional gl(m|n)-module L(Λ).
pub fn type2_finite(w: &Weight) -> Result<bool> {
    let full = require_finite_dominant(w)?;
    let (m, n) = (full.sig().m(), full.sig().n());
    if n == 0 {
        return Ok(true);
    }
    let pr = Pairing::new(&full);
    if pr.a(1, m + 1).is_negative() {
        return Ok(true);
    }
    Ok((1..=m).any(|k| pr.a(k, m + 1).is_zero() && pr.l(1, k).is_zero()))
}

/// No odd positive root α has (Λ+ρ, α) = 0.
pub fn is_typical(w: &Weight) -> bool {
    let pr = Pairing::new(w);
    let (m, n) = (w.sig().m(), w.sig().n());
    (1..=m).all(|i| (1..=n).all(|mu| !pr.a(i, m + mu).is_zero()))
}

/// Type-1 unitarity of the k-module L₀(Λ).
pub fn kmod_type1(w: &Weight) -> Result<bool> {
    let sig = w.sig();
    sig.require_noncompact()?;
    require_dominant(w)?;
    let (m, n) = (sig.m(), sig.n());
    let pr = Pairing::new(w);
    if pr.a(m, m + n).is_positive() {
        return Ok(true);
    }
    Ok((1..=n).any(|mu| pr.a(m, m + mu).is_zero() && pr.l(m + mu, m + n).is_zero()))
}

/// γ = (Λ+ρ, θ) − ½(θ, θ).
pub fn gamma(w: &Weight, theta: &ThetaShift) -> Result<Rational> {
    let t = theta.to_weight();
    let shifted = w + &rho_for(w.sig());
    Ok(bilinear(&shifted, &t)? - bilinear(&t, &t)? / int(2))
}

/// First θ of height ≤ `cap` with γ > 0, in enumeration order.
pub fn gamma_bound_violation(w: &Weight, cap: usize) -> Result<Option<(ThetaShift, Rational)>> {
    if !kmod_type1(w)? {
        return Err(Error::NotTypeOne(w.to_string()));
    }
    for theta in ThetaShift::enumerate(w.sig(), cap) {
        // a k-highest weight ξ = Λ − θ is k-dominant, so other shapes cannot occur
        if !is_dominant(&(w - &theta.to_weight())) {
            continue;
        }
        let g = gamma(w, &theta)?;
        if g.is_positive() {
            return Ok(Some((theta, g)));
        }
    }
    Ok(None)
}

/// True iff γ ≤ 0 for every θ of height ≤ `cap` with Λ − θ dominant.
pub fn gamma_bound_sufficient(w: &Weight, cap: usize) -> Result<bool> {
    Ok(gamma_bound_violation(w, cap)?.is_none())
}

/// The classical u(p,q) criterion for n = 0.
pub fn classical_upq(w: &Weight) -> Result<bool> {
    let sig = w.sig();
    if sig.n() != 0 {
        return Err(Error::UnsupportedSignature(format!("{sig}: classical test needs n = 0")));
    }
    require_dominant(w)?;
    let (p, q, m) = (sig.p(), sig.q(), sig.m());
    let lam = w.lambda();
    let spread = &lam[m - 1] - &lam[0];
    for i in 1..=p {
        for j in 1..=q {
            if lam[0] != lam[i - 1] || lam[m - j] != lam[m - 1] {
                continue;
            }
            let c1 = spread == int(m as i64 - j as i64 - i as i64);
            let c2 = spread > int((m - i).min(m - j) as i64 - 1);
            if c1 || c2 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Highest weight of the bottom graded component of a type-1 unitary gl(m|n)-module.
pub fn lambda_bar(w: &Weight) -> Result<Weight> {
    let full = require_finite_dominant(w)?;
    let branches = type1_branches(&full)?;
    let (m, n) = (full.sig().m(), full.sig().n());
    let mu = if branches.typical {
        n + 1
    } else {
        *branches
            .atypical
            .first()
            .ok_or_else(|| Error::NotTypeOne(w.to_string()))?
    };
    let mu_m = mu as i64 - 1;
    let mut out = w.clone();
    for i in 1..=m {
        let mu_i = if i == m {
            mu_m
        } else {
            let gap = (&full.lambda()[i - 1] - &full.lambda()[m - 1])
                .to_integer()
                .to_i64()
                .expect("dominance keeps gaps small");
            (n as i64).min(mu_m + gap)
        };
        for nu in 1..=mu_i as usize {
            out = out - Weight::root(w.sig(), i, m + nu)?;
        }
    }
    Ok(out)
}

/// Λ_{q|n}: the bottom-component recipe applied to the gl(q|n) block of Λ.
pub fn lambda_qn(w: &Weight) -> Result<Weight> {
    if !kmod_type1(w)? {
        return Err(Error::NotTypeOne(w.to_string()));
    }
    let sig = w.sig();
    let (p, m) = (sig.p(), sig.m());
    let block_sig = Signature::gl(sig.q(), sig.n())?;
    let block = Weight::new(block_sig, w.lambda()[p..m].to_vec(), w.omega().to_vec())?;
    let bar = lambda_bar(&block)?;
    let mut lam = w.lambda()[..p].to_vec();
    lam.extend_from_slice(bar.lambda());
    Weight::new(sig, lam, bar.omega().to_vec())
}

/// Howe-duality data realizing an integral unitary weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntuniConstruction {
    pub d: usize,
    pub lam: GeneralizedPartition,
    pub flat: Weight,
    pub shift: Rational,
}

fn to_int(x: &Rational) -> i64 {
    x.to_integer().to_i64().expect("small integral weight")
}

pub fn intuni_construction(w: &Weight) -> Result<IntuniConstruction> {
    let verdict = integral_classify(w)?;
    let branch = verdict
        .branch
        .ok_or_else(|| Error::NotIntegrallyUnitary(w.to_string()))?;
    let sig = w.sig();
    let (p, m, n) = (sig.p(), sig.m(), sig.n());
    let lam: Vec<i64> = w.lambda().iter().map(to_int).collect();
    let om: Vec<i64> = w.omega().iter().map(to_int).collect();
    let omega_n = om[n - 1];
    let d = -lam[0] - omega_n;
    if d < 0 {
        return Err(Error::Inconsistent(format!("negative d = {d} for {w}")));
    }
    let shift = int(d + lam[0]);
    if d == 0 {
        let flat = Weight::zero(sig);
        let rebuilt = shift_scalar(&flat, &int(lam[0]));
        if &rebuilt != w {
            return Err(Error::Inconsistent(format!("d = 0 but {w} is not a scalar weight")));
        }
        return Ok(IntuniConstruction {
            d: 0,
            lam: GeneralizedPartition::new(Vec::new())?,
            flat,
            shift: int(lam[0]),
        });
    }
    let w_ = verdict.witnesses;
    let (j, mu) = match branch {
        Branch::One => (m, w_.mu.unwrap_or(n)),
        Branch::Two => (w_.j.expect("branch two has j"), 1),
    };
    let i = w_.i.unwrap_or(1);

    let l1: Vec<i64> = (p + 1..=j).map(|k| lam[k - 1] + omega_n).collect();
    let mut l2_src: Vec<i64> = (1..mu).map(|nu| om[nu - 1] - omega_n).collect();
    l2_src.retain(|&x| x != 0);
    let l2: Vec<i64> = if l2_src.is_empty() {
        Vec::new()
    } else {
        GeneralizedPartition::new(l2_src)?.conjugate()?.parts().to_vec()
    };
    let l3: Vec<i64> = (i + 1..=p).map(|k| lam[k - 1] - lam[0]).collect();

    let used = l1.len() + l2.len() + l3.len();
    let d_us = d as usize;
    if used > d_us {
        return Err(Error::Inconsistent(format!(
            "partition pieces need {used} rows but d = {d}"
        )));
    }
    let mut parts = l1;
    parts.extend(l2);
    parts.extend(std::iter::repeat(0).take(d_us - used));
    parts.extend(l3);
    let partition = GeneralizedPartition::new(parts)?;
    let flat = lambda_flat(&partition, d_us, sig)?;
    if shift_scalar(&flat, &shift) != *w {
        return Err(Error::Inconsistent(format!(
            "flat {flat} shifted by {} does not rebuild {w}",
            rational::format(&shift)
        )));
    }
    Ok(IntuniConstruction {
        d: d_us,
        lam: partition,
        flat,
        shift,
    })
}

/// Dual-unitary lowest weight modules with lowest weight Υ: test −Υ.
pub fn dual_unitary_lowest(w: &Weight) -> Result<Verdict> {
    check_u(&-w)
}

/// Unitary lowest weight gl(n|q+p)-modules, via Υ^τ.
pub fn gl_nqp_unitary_lowest(u: &SwappedWeight) -> Result<Verdict> {
    check_u(&u.tau())
}

/// Dual-unitary highest weight gl(n|q+p)-modules, via −Υ^τ.
pub fn gl_nqp_dual_unitary_highest(u: &SwappedWeight) -> Result<Verdict> {
    check_u(&-u.tau())
}

/// Whether gl(p+q|r+s) admits only one-dimensional (dual) unitary simple modules.
pub fn pqrs_is_trivial_only(p: usize, q: usize, r: usize, s: usize) -> bool {
    p * q != 0 && r * s != 0
}

/// Whether `w` fulfils the chain λ_{p+1} ≥ … ≥ λ_m ≥ −ω_n ≥ … ≥ −ω_1 ≥ λ_1 ≥ … ≥ λ_p.
pub fn ordering_holds(w: &Weight) -> bool {
    let sig = w.sig();
    let (p, m) = (sig.p(), sig.m());
    let mut chain: Vec<Rational> = w.lambda()[p..m].to_vec();
    chain.extend(w.omega().iter().rev().map(|x| -x));
    chain.extend(w.lambda()[..p].iter().cloned());
    chain.windows(2).all(|v| v[0] >= v[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::superweights::tau_weight;

    fn sig(p: usize, q: usize, n: usize) -> Signature {
        Signature::new(p, q, n).unwrap()
    }

    fn w(s: Signature, text: &str) -> Weight {
        Weight::parse(s, text).unwrap()
    }

    #[test]
    fn pairing_agrees_with_bilinear() {
        let s = sig(2, 1, 2);
        let x = w(s, "3,1,1/2;2,-7/3");
        let pr = Pairing::new(&x);
        for a in 1..=5 {
            for b in 1..=5 {
                if a == b {
                    continue;
                }
                let r = Weight::root(s, a, b).unwrap();
                assert_eq!(pr.l(a, b), bilinear(&x, &r).unwrap());
                assert_eq!(pr.a(a, b), bilinear(&(&x + &rho_for(s)), &r).unwrap());
            }
        }
    }

    #[test]
    fn check_u_examples() {
        let s = sig(1, 1, 1);
        let v = check_u(&w(s, "-3,1;1/2")).unwrap();
        assert!(v.unitary);
        assert_eq!(v.condition, Some(Condition::U1));
        let v = check_u(&w(s, "0,0;0")).unwrap();
        assert_eq!(v.condition, Some(Condition::U6));
        assert_eq!(v.witnesses, Witnesses { i: Some(1), mu: None, j: Some(1) });
        assert_eq!(v.to_json().to_string(), r#"{"condition":"U6","i":1,"j":1,"unitary":true}"#);
        assert!(!check_u(&w(s, "0,0;1")).unwrap().unitary);
        assert_eq!(check_u(&w(s, "0,0;1")).unwrap().to_json().to_string(), r#"{"unitary":false}"#);
        assert!(matches!(
            check_u(&w(sig(2, 1, 1), "0,1/2,0;0")),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            check_u(&Weight::zero(sig(1, 0, 1))),
            Err(Error::UnsupportedSignature(_))
        ));
    }

    #[test]
    fn integral_examples() {
        let s = sig(1, 1, 1);
        let v = integral_classify(&w(s, "-2,0;0")).unwrap();
        assert_eq!(v.branch, Some(Branch::Two));
        assert_eq!(v.witnesses.j, Some(1));
        let v = integral_classify(&w(s, "-3,1;1")).unwrap();
        assert_eq!(v.branch, Some(Branch::One));
        assert!(!integral_classify(&w(s, "0,0;1")).unwrap().unitary);
        assert!(matches!(
            integral_classify(&w(s, "-3,1;1/2")),
            Err(Error::NotIntegral(_))
        ));
    }

    fn gl(m: usize, n: usize, text: &str) -> Weight {
        Weight::parse(Signature::gl(m, n).unwrap(), text).unwrap()
    }

    #[test]
    fn finite_examples() {
        assert!(type1_finite(&gl(1, 1, "1;0")).unwrap());
        assert_eq!(type1_branches(&gl(1, 1, "1;0")).unwrap().atypical, Vec::<usize>::new());
        assert_eq!(type1_branches(&gl(1, 1, "0;0")).unwrap().atypical, vec![1]);
        assert!(!type1_finite(&gl(1, 1, "-1;0")).unwrap());
        assert!(type2_finite(&gl(1, 1, "-1;0")).unwrap());
        assert!(type2_finite(&gl(1, 1, "0;0")).unwrap());
        assert!(!type2_finite(&gl(1, 1, "1;0")).unwrap());
        assert!(type1_finite(&gl(2, 0, "3,1;")).unwrap());
        assert!(matches!(type1_finite(&gl(2, 1, "0,1;0")), Err(Error::NotDominant(_))));
    }

    #[test]
    fn typicality_examples() {
        assert!(is_typical(&gl(1, 1, "1;0")));
        assert!(!is_typical(&gl(1, 1, "0;0")));
        // Λ_s pairs to zero with every ε−δ, so the factor stays at 1.
        let shifted = shift_scalar(&gl(1, 1, "1;0"), &int(1));
        assert!(is_typical(&shifted));
        let pr = Pairing::new(&shifted);
        assert_eq!(pr.a(1, 2), int(1));
    }

    #[test]
    fn kmod_examples() {
        let s = sig(1, 1, 1);
        assert!(kmod_type1(&w(s, "-3,1;1/2")).unwrap());
        assert!(kmod_type1(&w(s, "0,0;0")).unwrap());
        assert!(!kmod_type1(&w(s, "5,-2;1")).unwrap());
    }

    #[test]
    fn gamma_examples() {
        let s = sig(1, 1, 1);
        let x = w(s, "-3,1;1/2");
        let t = ThetaShift::odd_step(s, 1, 1).unwrap();
        assert_eq!(gamma(&x, &t).unwrap(), frac(-3, 2));
        assert_eq!(gamma(&x, &ThetaShift::zero(s)).unwrap(), int(0));
        let t = ThetaShift::even_step(s, 1, 2).unwrap();
        assert_eq!(gamma(&Weight::zero(s), &t).unwrap(), int(0));
    }

    #[test]
    fn gamma_matches_xi_form() {
        let s = sig(2, 1, 2);
        let x = w(s, "-5,-6,1;1/2,-1/2");
        let r2 = rho_for(s).scale(&int(2));
        for t in ThetaShift::enumerate(s, 5) {
            let th = t.to_weight();
            let xi = &x - &th;
            let alt = bilinear(&(&x - &xi), &(&(&x + &xi) + &r2)).unwrap() / int(2);
            assert_eq!(gamma(&x, &t).unwrap(), alt);
        }
    }

    #[test]
    fn gamma_bound_examples() {
        let s = sig(1, 1, 1);
        assert!(gamma_bound_sufficient(&w(s, "-3,1;1/2"), 4).unwrap());
        assert!(!gamma_bound_sufficient(&w(s, "0,0;1"), 2).unwrap());
        assert!(gamma_bound_sufficient(&w(s, "0,0;1"), 0).unwrap());
        assert!(matches!(
            gamma_bound_sufficient(&w(s, "5,-2;1"), 2),
            Err(Error::NotTypeOne(_))
        ));
    }

    #[test]
    fn classical_examples() {
        let s = sig(1, 1, 0);
        assert!(classical_upq(&w(s, "0,0;")).unwrap());
        assert!(classical_upq(&w(s, "-1,0;")).unwrap());
        assert!(!classical_upq(&w(s, "1,0;")).unwrap());
        assert!(classical_upq(&w(sig(1, 1, 1), "0,0;0")).is_err());
    }

    #[test]
    fn lambda_bar_examples() {
        assert_eq!(lambda_bar(&gl(1, 1, "1;0")).unwrap(), gl(1, 1, "0;1"));
        assert_eq!(lambda_bar(&gl(1, 1, "0;0")).unwrap(), gl(1, 1, "0;0"));
        assert_eq!(lambda_bar(&gl(1, 2, "2;0,0")).unwrap(), gl(1, 2, "0;1,1"));
        assert!(matches!(lambda_bar(&gl(1, 1, "-1;0")), Err(Error::NotTypeOne(_))));
    }

    #[test]
    fn lambda_qn_examples() {
        let s = sig(1, 1, 1);
        assert_eq!(lambda_qn(&w(s, "-3,1;1/2")).unwrap(), w(s, "-3,0;3/2"));
        assert_eq!(lambda_qn(&w(s, "0,0;0")).unwrap(), w(s, "0,0;0"));
    }

    #[test]
    fn intuni_examples() {
        let s = sig(1, 1, 1);
        let c = intuni_construction(&w(s, "-2,0;0")).unwrap();
        assert_eq!(c.d, 2);
        assert_eq!(c.lam.parts(), &[0, 0]);
        assert_eq!(c.flat, w(s, "-2,0;0"));
        assert_eq!(c.shift, int(0));

        let c = intuni_construction(&w(s, "-3,1;1")).unwrap();
        assert_eq!(c.d, 2);
        assert_eq!(c.lam.parts(), &[2, 0]);
        assert_eq!(c.flat, w(s, "-2,2;0"));
        assert_eq!(c.shift, int(-1));

        let c = intuni_construction(&Weight::zero(s)).unwrap();
        assert_eq!(c.d, 0);
        assert_eq!(c.shift, int(0));
        assert!(matches!(
            intuni_construction(&w(s, "0,0;1")),
            Err(Error::NotIntegrallyUnitary(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let s = sig(1, 1, 1);
        let v = dual_unitary_lowest(&w(s, "3,-1;-1/2")).unwrap();
        assert_eq!(v.condition, Some(Condition::U1));
        assert!(dual_unitary_lowest(&Weight::zero(s)).unwrap().unitary);
        assert!(!dual_unitary_lowest(&w(s, "0,0;-1")).unwrap().unitary);

        let x = w(s, "-3,1;1/2");
        let t = tau_weight(&x);
        assert_eq!(gl_nqp_unitary_lowest(&t).unwrap(), check_u(&x).unwrap());
        assert_eq!(gl_nqp_dual_unitary_highest(&t.neg()).unwrap(), check_u(&x).unwrap());
        let z = tau_weight(&Weight::zero(s));
        assert!(gl_nqp_unitary_lowest(&z).unwrap().unitary);
        assert!(gl_nqp_dual_unitary_highest(&z).unwrap().unitary);
    }

    #[test]
    fn pqrs_examples() {
        assert!(pqrs_is_trivial_only(1, 1, 1, 1));
        assert!(!pqrs_is_trivial_only(1, 0, 1, 1));
        assert!(!pqrs_is_trivial_only(2, 3, 0, 4));
    }
}
