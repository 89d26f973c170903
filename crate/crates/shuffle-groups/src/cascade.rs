//! The cascading shuffle groups `G_t = Sh(V_t, 2^(e−t)·n)` for `t = 1, …, e`,
//! all acting on the same deck of `2^e·n` cards, and exact verification of
//! the identities relating them.
//!
//! Here `V_t ≤ Sym(2^t)` is the elementary abelian group of bit flips of the
//! pile index, `σ_t` is the standard shuffle for `2^t` piles of `2^(e−t)·n`
//! cards, and `x_r = (v_r)ρ` is the rigid pile rearrangement induced by
//! flipping bit `r` of the `2^e`-pile index.

use num_bigint::BigUint;
use thiserror::Error;

use crate::build::{
    pile_perm, shuffle_group, BuildError, DeckSpec, PileFamily, PileGroupSpec,
};
use crate::bsgs::{GroupError, PermGroup};
use crate::digits::pow;
use crate::perm::Permutation;

/// Errors in cascade construction and verification.
#[derive(Debug, Error)]
pub enum CascadeError {
    /// Parameters outside the cascade's domain.
    #[error("invalid cascade parameters: {0}")]
    InvalidSpec(String),
    /// Bit index out of range for the pile count.
    #[error("bit index {s} out of range for 2^{t} piles")]
    BitOutOfRange { s: u32, t: u32 },
    /// Embedding level exceeds the cascade height.
    #[error("level t = {t} exceeds e = {e}")]
    LevelTooDeep { t: u32, e: u32 },
    /// Underlying construction error.
    #[error(transparent)]
    Build(#[from] BuildError),
    /// Underlying group-computation error.
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parameters of one cascade: `k = 2^e` piles at the top, deck of `2^e·n`
/// cards with `n` not a power of 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CascadeSpec {
    e: u32,
    n: usize,
}

impl CascadeSpec {
    /// Validates `e ≥ 2`, `n ≥ 2`, and `n` having an odd prime factor.
    pub fn new(e: u32, n: usize) -> Result<Self, CascadeError> {
        if e < 2 {
            return Err(CascadeError::InvalidSpec(format!("e = {e} must be >= 2")));
        }
        if n < 2 {
            return Err(CascadeError::InvalidSpec(format!("n = {n} must be >= 2")));
        }
        if n.is_power_of_two() {
            return Err(CascadeError::InvalidSpec(format!(
                "n = {n} must have an odd prime factor"
            )));
        }
        Ok(CascadeSpec { e, n })
    }

    /// Cascade height `e`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Cards per top-level pile.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Deck size `2^e·n`.
    pub fn degree(&self) -> usize {
        pow(2, self.e) * self.n
    }

    /// The deck seen by level `t`: `2^t` piles of `2^(e−t)·n` cards.
    pub fn deck_at(&self, t: u32) -> Result<DeckSpec, CascadeError> {
        if t == 0 || t > self.e {
            return Err(CascadeError::LevelTooDeep { t, e: self.e });
        }
        Ok(DeckSpec::new(pow(2, t), pow(2, self.e - t) * self.n)?)
    }
}

/// The involution `v_{t,s}` on `[2^t]` flipping bit `s` of the pile index.
pub fn v_generator(t: u32, s: u32) -> Result<Permutation, CascadeError> {
    if s >= t {
        return Err(CascadeError::BitOutOfRange { s, t });
    }
    let images = (0..pow(2, t)).map(|a| a ^ (1 << s)).collect();
    Ok(Permutation::from_images(images).expect("xor is a bijection"))
}

/// Embeds a pile permutation `τ` on `[2^t]` into `Sym(2^e·n)` as `ρ_{t,τ}`:
/// the `2^t` blocks of `2^(e−t)·n` consecutive cards move rigidly by `τ`.
pub fn rho_t_embed(tau: &Permutation, e: u32, n: usize) -> Result<Permutation, CascadeError> {
    let piles = tau.degree();
    if !piles.is_power_of_two() {
        return Err(CascadeError::InvalidSpec(format!(
            "pile permutation degree {piles} is not a power of two"
        )));
    }
    let t = piles.trailing_zeros();
    if t == 0 || t > e {
        return Err(CascadeError::LevelTooDeep { t, e });
    }
    let deck = DeckSpec::new(piles, pow(2, e - t) * n)?;
    Ok(pile_perm(tau, deck)?)
}

/// Builds `[G_1, …, G_e]`, each as a permutation group on `[2^e·n]` generated
/// by `σ_t` and the embedded bit flips `(v_{t,s})ρ_t`.
pub fn cascade_groups(spec: CascadeSpec) -> Result<Vec<PermGroup>, CascadeError> {
    (1..=spec.e)
        .map(|t| {
            let deck = spec.deck_at(t)?;
            let pile_spec = PileGroupSpec::new(PileFamily::ElemAbelian2 { t }, pow(2, t))?;
            Ok(shuffle_group(&pile_spec, deck)?)
        })
        .collect()
}

/// One verified identity (or its counterexample) in a cascade report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeCheck {
    /// Human-readable name of the identity.
    pub name: String,
    /// Whether the identity held exactly.
    pub passed: bool,
    /// On failure, a concrete counterexample description.
    pub counterexample: Option<String>,
}

/// Report of the five cascade identities plus the group orders.
#[derive(Debug, Clone)]
pub struct CascadeReport {
    /// The cascade verified.
    pub spec: CascadeSpec,
    /// One entry per identity checked.
    pub checks: Vec<CascadeCheck>,
    /// `|G_t|` for `t = 1, …, e`.
    pub orders: Vec<BigUint>,
}

impl CascadeReport {
    /// True iff every identity held.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies, as exact permutation and group identities:
/// (i) `σ_t = σ^t` for all `t ≤ e`;
/// (ii) `x_r^σ = x_{r+1}` for `r ≤ e−2`;
/// (iii) `G_t = ⟨x_{e−t}, …, x_{e−1}, σ^t⟩` by mutual generator membership;
/// (iv) `G_t` normalises `G_{t+1}` (generator conjugates stay inside);
/// (v) `G_t ≤ G_1`.
pub fn verify_cascade_lemmas(spec: CascadeSpec) -> Result<CascadeReport, CascadeError> {
    let e = spec.e;
    let n = spec.n;
    let degree = spec.degree();
    let sigma = crate::build::standard_shuffle(spec.deck_at(1)?);
    let groups = cascade_groups(spec)?;
    let orders: Vec<BigUint> = groups.iter().map(|g| g.order()).collect();
    // x_r = (v_{e,r})ρ at the top level t = e.
    let x: Vec<Permutation> = (0..e)
        .map(|r| rho_t_embed(&v_generator(e, r)?, e, n))
        .collect::<Result<_, _>>()?;
    let mut checks = Vec::new();

    // (i) σ_t = σ^t.
    let mut failure = None;
    for t in 1..=e {
        let sigma_t = crate::build::standard_shuffle(spec.deck_at(t)?);
        let power = sigma.power(t as i64);
        if sigma_t != power {
            failure = Some(format!("sigma_{t} != sigma^{t}"));
            break;
        }
    }
    checks.push(check("sigma_t == sigma^t for all t", failure));

    // (ii) x_r^σ = x_{r+1}.
    let mut failure = None;
    for r in 0..e.saturating_sub(1) {
        let conj = x[r as usize].conjugate_by(&sigma).expect("same degree");
        if conj != x[(r + 1) as usize] {
            failure = Some(format!("x_{r}^sigma != x_{}", r + 1));
            break;
        }
    }
    checks.push(check("x_r^sigma == x_(r+1) for r <= e-2", failure));

    // (iii) G_t = ⟨x_{e−t}, …, x_{e−1}, σ^t⟩, both inclusions on generators.
    let mut failure = None;
    'levels: for t in 1..=e {
        let mut gens: Vec<Permutation> = (e - t..e).map(|r| x[r as usize].clone()).collect();
        gens.push(sigma.power(t as i64));
        let alt_group = PermGroup::new(degree, gens)?;
        for g in alt_group.generators() {
            if !groups[(t - 1) as usize].contains(g)? {
                failure = Some(format!(
                    "generator of <x_(e-{t}..e-1), sigma^{t}> not in G_{t}"
                ));
                break 'levels;
            }
        }
        for g in groups[(t - 1) as usize].generators() {
            if !alt_group.contains(g)? {
                failure = Some(format!(
                    "generator of G_{t} not in <x_(e-{t}..e-1), sigma^{t}>"
                ));
                break 'levels;
            }
        }
    }
    checks.push(check("G_t == <x_(e-t),...,x_(e-1), sigma^t>", failure));

    // (iv) G_t normalises G_{t+1}.
    let mut failure = None;
    'norm: for t in 1..e {
        let outer = &groups[(t - 1) as usize];
        let inner = &groups[t as usize];
        for h in inner.generators() {
            for g in outer.generators() {
                let conj = h.conjugate_by(g).expect("same degree");
                if !inner.contains(&conj)? {
                    failure = Some(format!(
                        "conjugate of a G_{} generator by a G_{t} generator escapes G_{}",
                        t + 1,
                        t + 1
                    ));
                    break 'norm;
                }
            }
        }
    }
    checks.push(check("G_t normalises G_(t+1)", failure));

    // (v) G_t ≤ G_1.
    let mut failure = None;
    for t in 2..=e {
        if !groups[(t - 1) as usize].is_subgroup_of(&groups[0])? {
            failure = Some(format!("G_{t} is not a subgroup of G_1"));
            break;
        }
    }
    checks.push(check("G_t <= G_1", failure));

    Ok(CascadeReport {
        spec,
        checks,
        orders,
    })
}

fn check(name: &str, failure: Option<String>) -> CascadeCheck {
    CascadeCheck {
        name: name.to_string(),
        passed: failure.is_none(),
        counterexample: failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsgs::factorial;
    use num_traits::One;

    #[test]
    fn v_generator_examples() {
        assert_eq!(v_generator(1, 0).unwrap().to_string(), "(0 1)");
        assert_eq!(v_generator(2, 1).unwrap().to_string(), "(0 2)(1 3)");
        let gens: Vec<Permutation> = (0..3).map(|s| v_generator(3, s).unwrap()).collect();
        let group = PermGroup::new(8, gens.clone()).unwrap();
        assert_eq!(group.order(), BigUint::from(8u32));
        for a in &gens {
            for b in &gens {
                assert_eq!(a.compose(b).unwrap(), b.compose(a).unwrap());
            }
        }
        assert!(matches!(
            v_generator(2, 2),
            Err(CascadeError::BitOutOfRange { .. })
        ));
    }

    #[test]
    fn rho_embed_examples() {
        // t = e: coincides with the plain pile rearrangement.
        let tau = Permutation::parse_cycles(4, "(0 1 2 3)").unwrap();
        let embedded = rho_t_embed(&tau, 2, 3).unwrap();
        let direct = pile_perm(&tau, DeckSpec::new(4, 3).unwrap()).unwrap();
        assert_eq!(embedded, direct);
        // Identity embeds to identity.
        let id = Permutation::identity(4);
        assert!(rho_t_embed(&id, 3, 3).unwrap().is_identity());
        // Compatibility: (v_{t,s})ρ_t == (v_{e−t+s})ρ.
        let (e, n) = (3u32, 3usize);
        for t in 1..=e {
            for s in 0..t {
                let lhs = rho_t_embed(&v_generator(t, s).unwrap(), e, n).unwrap();
                let rhs = rho_t_embed(&v_generator(e, e - t + s).unwrap(), e, n).unwrap();
                assert_eq!(lhs, rhs, "t={t} s={s}");
            }
        }
        assert!(matches!(
            rho_t_embed(&Permutation::identity(8), 2, 3),
            Err(CascadeError::LevelTooDeep { .. })
        ));
    }

    #[test]
    fn cascade_orders_e2_n3() {
        let spec = CascadeSpec::new(2, 3).unwrap();
        let groups = cascade_groups(spec).unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].order(), BigUint::from(7680u32));
        assert_eq!(groups[1].order(), BigUint::from(3840u32));
    }

    #[test]
    fn cascade_orders_e3_n3() {
        let spec = CascadeSpec::new(3, 3).unwrap();
        let groups = cascade_groups(spec).unwrap();
        let expected = BigUint::from(194641920u32);
        for g in &groups {
            assert_eq!(g.order(), expected);
        }
    }

    #[test]
    fn cascade_orders_e2_n5() {
        let spec = CascadeSpec::new(2, 5).unwrap();
        let groups = cascade_groups(spec).unwrap();
        let b10 = (BigUint::one() << 10) * factorial(10);
        assert_eq!(groups[0].order(), b10);
        assert_eq!(groups[1].order(), &b10 / BigUint::from(2u32));
    }

    #[test]
    fn lemmas_e2_n3() {
        let report = verify_cascade_lemmas(CascadeSpec::new(2, 3).unwrap()).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        assert_eq!(report.checks.len(), 5);
    }

    #[test]
    fn lemmas_e2_n5() {
        let report = verify_cascade_lemmas(CascadeSpec::new(2, 5).unwrap()).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        // Index exactly two.
        assert_eq!(
            &report.orders[0] / &report.orders[1],
            BigUint::from(2u32)
        );
    }

    #[test]
    fn lemmas_e3_n5() {
        let report = verify_cascade_lemmas(CascadeSpec::new(3, 5).unwrap()).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        assert!(report.orders.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn spec_validation() {
        assert!(CascadeSpec::new(1, 3).is_err());
        assert!(CascadeSpec::new(2, 8).is_err());
        assert!(CascadeSpec::new(2, 1).is_err());
        assert!(CascadeSpec::new(2, 6).is_ok());
    }
}
