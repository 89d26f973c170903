//! Construction of the concrete shuffle permutations and generator sets: the
//! standard shuffle σ, pile embeddings ρ_τ, the named pile-group families, and
//! the parity predicates.
//!
//! Cards are labelled `an + b` for pile `a ∈ [k]` and position `b ∈ [n]`. The
//! standard shuffle fixes `0` and `kn-1` and maps every other card `i` to
//! `ki mod (kn-1)`; equivalently `an + b ↦ bk + a`. Both formulas are computed
//! and asserted equal on every construction.

use thiserror::Error;

use crate::bsgs::{GroupError, PermGroup};
use crate::digits::{from_digits, pow, to_digits};
use crate::perm::{PermError, Permutation};

/// Errors produced while building decks, pile groups and shuffle groups.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    /// `k` or `n` is below 2.
    #[error("deck requires k >= 2 and n >= 2, got k={k}, n={n}")]
    InvalidDeck { k: usize, n: usize },
    /// A pile-group family's parameters do not fit the pile count.
    #[error("invalid pile-group spec: {0}")]
    InvalidSpec(String),
    /// A permutation of the wrong degree was supplied.
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    /// An element does not preserve the central-symmetry pair partition.
    #[error("element is not in B_n: pair {{{i}, {j}}} is not mapped to a pair")]
    NotInBn { i: usize, j: usize },
    /// Underlying permutation error.
    #[error(transparent)]
    Perm(#[from] PermError),
    /// Underlying group error.
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A deck of `kn` cards in `k` piles of `n` cards each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeckSpec {
    k: usize,
    n: usize,
}

impl DeckSpec {
    /// Validates `k ≥ 2` and `n ≥ 2`.
    pub fn new(k: usize, n: usize) -> Result<Self, BuildError> {
        if k < 2 || n < 2 {
            return Err(BuildError::InvalidDeck { k, n });
        }
        Ok(DeckSpec { k, n })
    }

    /// Number of piles.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Cards per pile.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of cards `kn`.
    pub fn degree(&self) -> usize {
        self.k * self.n
    }
}

/// The named pile-group families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PileFamily {
    /// `Sym(k)`.
    Sym,
    /// `Alt(k)`.
    Alt,
    /// `C_k` generated by `a ↦ a+1 (mod k)`.
    Cyclic,
    /// The regular elementary abelian 2-group `V_t` of bit flips; requires `k = 2^t`.
    ElemAbelian2 { t: u32 },
    /// `AGL(e, p)` on `[p^e]`; requires `k = p^e` with `p` prime.
    Affine { e: u32, p: usize },
    /// `Sym(ℓ) ≀ Sym(e)` in product action on `[ℓ]^e`; requires `k = ℓ^e`.
    ProductWreath { ell: usize, e: u32 },
}

/// A symbolic description of a pile group `P ≤ Sym(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PileGroupSpec {
    /// The family.
    pub family: PileFamily,
    /// The pile count the group acts on.
    pub k: usize,
}

impl PileGroupSpec {
    /// Creates and validates a spec (power-shape constraints on `k`).
    pub fn new(family: PileFamily, k: usize) -> Result<Self, BuildError> {
        let spec = PileGroupSpec { family, k };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), BuildError> {
        if self.k < 2 {
            return Err(BuildError::InvalidSpec(format!(
                "pile count must be at least 2, got {}",
                self.k
            )));
        }
        match self.family {
            PileFamily::Sym | PileFamily::Alt | PileFamily::Cyclic => Ok(()),
            PileFamily::ElemAbelian2 { t } => {
                if t >= 1 && pow(2, t) == self.k {
                    Ok(())
                } else {
                    Err(BuildError::InvalidSpec(format!(
                        "elem2:{t} requires k = 2^{t}, got k={}",
                        self.k
                    )))
                }
            }
            PileFamily::Affine { e, p } => {
                if e >= 1 && crate::bsgs::is_prime(p) && pow(p, e) == self.k {
                    Ok(())
                } else {
                    Err(BuildError::InvalidSpec(format!(
                        "agl:{e}:{p} requires prime p and k = p^e, got k={}",
                        self.k
                    )))
                }
            }
            PileFamily::ProductWreath { ell, e } => {
                if ell >= 2 && e >= 1 && pow(ell, e) == self.k {
                    Ok(())
                } else {
                    Err(BuildError::InvalidSpec(format!(
                        "wreath:{ell}:{e} requires k = {ell}^{e}, got k={}",
                        self.k
                    )))
                }
            }
        }
    }

    /// Parses the CLI's compact form: `"sym"`, `"alt"`, `"cyclic"`,
    /// `"elem2:t"`, `"agl:e:p"`, `"wreath:l:e"`.
    pub fn parse(text: &str, k: usize) -> Result<Self, BuildError> {
        let parts: Vec<&str> = text.split(':').collect();
        let bad = || BuildError::InvalidSpec(format!("unrecognised pile-group spec {text:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let family = match (parts.as_slice(), parts[0]) {
            ([_], "sym") => PileFamily::Sym,
            ([_], "alt") => PileFamily::Alt,
            ([_], "cyclic") => PileFamily::Cyclic,
            ([_, t], "elem2") => PileFamily::ElemAbelian2 { t: num(t)? as u32 },
            ([_, e, p], "agl") => PileFamily::Affine {
                e: num(e)? as u32,
                p: num(p)?,
            },
            ([_, l, e], "wreath") => PileFamily::ProductWreath {
                ell: num(l)?,
                e: num(e)? as u32,
            },
            _ => return Err(bad()),
        };
        PileGroupSpec::new(family, k)
    }

    /// The compact string form (inverse of [`PileGroupSpec::parse`]).
    pub fn spec_string(&self) -> String {
        match self.family {
            PileFamily::Sym => "sym".to_string(),
            PileFamily::Alt => "alt".to_string(),
            PileFamily::Cyclic => "cyclic".to_string(),
            PileFamily::ElemAbelian2 { t } => format!("elem2:{t}"),
            PileFamily::Affine { e, p } => format!("agl:{e}:{p}"),
            PileFamily::ProductWreath { ell, e } => format!("wreath:{ell}:{e}"),
        }
    }
}

/// The standard shuffle σ on `[kn]`: pick up the top card of each pile from
/// left to right, repeatedly.
pub fn standard_shuffle(deck: DeckSpec) -> Permutation {
    let (k, n) = (deck.k, deck.n);
    let d = deck.degree();
    let mut images = Vec::with_capacity(d);
    for i in 0..d {
        // Card coordinates: i = an + b.
        let (a, b) = (i / n, i % n);
        let by_coords = b * k + a;
        let by_residue = if i == d - 1 { d - 1 } else { (k * i) % (d - 1) };
        assert_eq!(by_coords, by_residue, "shuffle formulas disagree at {i}");
        images.push(by_coords);
    }
    Permutation::from_images(images).expect("sigma is a bijection")
}

/// The pile embedding ρ_τ on `[kn]`: `(an + b) ↦ (a^τ)n + b`.
pub fn pile_perm(tau: &Permutation, deck: DeckSpec) -> Result<Permutation, BuildError> {
    if tau.degree() != deck.k {
        return Err(BuildError::DegreeMismatch {
            expected: deck.k,
            got: tau.degree(),
        });
    }
    let n = deck.n;
    let mut images = Vec::with_capacity(deck.degree());
    for i in 0..deck.degree() {
        let (a, b) = (i / n, i % n);
        images.push(tau.image(a) * n + b);
    }
    Ok(Permutation::from_images(images).expect("rho is a bijection"))
}

/// Applies a map on base-`ell` digit tuples pointwise to build a permutation
/// of `[ell^m]`.
fn perm_from_tuple_map(
    ell: usize,
    m: u32,
    f: impl Fn(&[usize]) -> Vec<usize>,
) -> Permutation {
    let d = pow(ell, m);
    let images = (0..d)
        .map(|i| from_digits(&f(&to_digits(i, ell, m as usize)), ell))
        .collect();
    Permutation::from_images(images).expect("tuple map is a bijection")
}

/// Smallest primitive root modulo a prime `p`.
fn primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    'next: for g in 2..p {
        let mut x = g;
        let mut ord = 1;
        while x != 1 {
            x = x * g % p;
            ord += 1;
            if ord > p {
                continue 'next; // defensive; cannot happen for prime p
            }
        }
        if ord == p - 1 {
            return g;
        }
    }
    unreachable!("prime p has a primitive root")
}

/// Generators of the named pile group as permutations of `[k]`.
///
/// For `Affine` and `ProductWreath` the point-to-coordinate bijection is the
/// shared most-significant-digit-first base-ℓ identification of
/// [`crate::digits`].
pub fn pile_group_generators(spec: &PileGroupSpec) -> Result<Vec<Permutation>, BuildError> {
    spec.validate()?;
    let k = spec.k;
    let full_cycle = || Permutation::from_cycles(k, &[(0..k).collect()]).expect("valid cycle");
    let gens = match spec.family {
        PileFamily::Sym => {
            let mut gens = vec![Permutation::from_cycles(k, &[vec![0, 1]]).expect("valid")];
            if k > 2 {
                gens.push(full_cycle());
            }
            gens
        }
        PileFamily::Alt => {
            if k < 3 {
                vec![] // Alt(2) is trivial
            } else {
                let mut gens = vec![Permutation::from_cycles(k, &[vec![0, 1, 2]]).expect("valid")];
                if k > 3 {
                    let c = full_cycle();
                    gens.push(if k % 2 == 0 { c.power(2) } else { c });
                }
                gens
            }
        }
        PileFamily::Cyclic => vec![full_cycle()],
        PileFamily::ElemAbelian2 { t } => (0..t)
            .map(|s| {
                let images = (0..k).map(|a| a ^ (1 << s)).collect();
                Permutation::from_images(images).expect("bit flip is a bijection")
            })
            .collect(),
        PileFamily::Affine { e, p } => affine_generators(e, p),
        PileFamily::ProductWreath { ell, e } => product_wreath_generators(ell, e),
    };
    Ok(gens)
}

/// Generators of `AGL(e, p)` on `[p^e]`: translations by basis vectors plus a
/// generating pair {transvection, monomial} for `GL(e, p)`. The monomial maps
/// `e_i ↦ e_{i+1}` and `e_{e-1} ↦ w·e_0`, with `w` a primitive root `z` for
/// odd `e` and `-z` for even `e`, so that its determinant generates `F_p^*`.
/// The generated order is validated against `p^e·∏(p^e - p^i)` in tests.
fn affine_generators(e: u32, p: usize) -> Vec<Permutation> {
    let m = e as usize;
    let mut gens = Vec::new();
    // Translations by the basis vectors.
    for r in 0..m {
        gens.push(perm_from_tuple_map(p, e, |v| {
            let mut w = v.to_vec();
            w[r] = (w[r] + 1) % p;
            w
        }));
    }
    if m == 1 {
        // GL(1, p) is scaling by a primitive root (trivial for p = 2).
        let z = primitive_root(p);
        if z != 1 {
            gens.push(perm_from_tuple_map(p, e, |v| vec![v[0] * z % p]));
        }
    } else {
        // Transvection: x_0 += x_1.
        gens.push(perm_from_tuple_map(p, e, |v| {
            let mut w = v.to_vec();
            w[0] = (w[0] + w[1]) % p;
            w
        }));
        // Monomial generator.
        let z = primitive_root(p);
        let w_entry = if e % 2 == 1 { z } else { (p - z) % p }.max(1);
        gens.push(perm_from_tuple_map(p, e, |v| {
            let mut w = vec![0; m];
            for (i, &vi) in v.iter().enumerate().take(m - 1) {
                w[i + 1] = vi;
            }
            w[0] = v[m - 1] * w_entry % p;
            w
        }));
    }
    gens
}

/// Generators of `Sym(ℓ) ≀ Sym(e)` in product action on `[ℓ]^e`: `Sym(ℓ)`
/// acting on coordinate 0, plus the coordinate swap `(0 1)` and the full
/// coordinate cycle.
fn product_wreath_generators(ell: usize, e: u32) -> Vec<Permutation> {
    let m = e as usize;
    let mut gens = Vec::new();
    // Sym(ell) on coordinate 0.
    gens.push(perm_from_tuple_map(ell, e, |v| {
        let mut w = v.to_vec();
        w[0] = match w[0] {
            0 => 1,
            1 => 0,
            x => x,
        };
        w
    }));
    if ell > 2 {
        gens.push(perm_from_tuple_map(ell, e, |v| {
            let mut w = v.to_vec();
            w[0] = (w[0] + 1) % ell;
            w
        }));
    }
    if m > 1 {
        // Coordinate swap (0 1).
        gens.push(perm_from_tuple_map(ell, e, |v| {
            let mut w = v.to_vec();
            w.swap(0, 1);
            w
        }));
        // Coordinate cycle: coordinate i of the image is coordinate i-1 of
        // the argument (the e-cycle acting on positions).
        if m > 2 {
            gens.push(perm_from_tuple_map(ell, e, |v| {
                let mut w = v.to_vec();
                w.rotate_right(1);
                w
            }));
        }
    }
    gens
}

/// The generalised shuffle group `Sh(P, n) = ⟨σ, ρ_τ | τ ∈ P⟩ ≤ Sym(kn)`.
pub fn shuffle_group(spec: &PileGroupSpec, deck: DeckSpec) -> Result<PermGroup, BuildError> {
    if spec.k != deck.k {
        return Err(BuildError::InvalidSpec(format!(
            "pile group acts on {} piles but deck has {}",
            spec.k, deck.k
        )));
    }
    let mut gens = vec![standard_shuffle(deck)];
    for tau in pile_group_generators(spec)? {
        gens.push(pile_perm(&tau, deck)?);
    }
    Ok(PermGroup::new(deck.degree(), gens)?)
}

/// True iff every generator of the named pile group is even (`P ≤ Alt(k)`).
pub fn pile_group_in_alt(spec: &PileGroupSpec) -> Result<bool, BuildError> {
    Ok(pile_group_generators(spec)?
        .iter()
        .all(|tau| tau.sign() == 1))
}

/// Parity containment: true iff `Sh(P, n) ≤ Alt(kn)`, decided from the
/// residues of `k` and `n` modulo 4 and whether `P ≤ Alt(k)`:
/// (1) `n ≡ 0 (mod 4)`; or (2) `n ≡ 2 (mod 4)` and `k mod 4 ∈ {0, 1}`; or
/// (3) `n` odd, `P ≤ Alt(k)`, and `n ≡ 1 (mod 4)` or `k mod 4 ∈ {0, 1}`.
pub fn parity_containment(spec: &PileGroupSpec, deck: DeckSpec) -> Result<bool, BuildError> {
    let n4 = deck.n % 4;
    let k4 = deck.k % 4;
    Ok(n4 == 0
        || (n4 == 2 && (k4 == 0 || k4 == 1))
        || (deck.n % 2 == 1 && pile_group_in_alt(spec)? && (n4 == 1 || k4 == 0 || k4 == 1)))
}

/// For `g` preserving the central-symmetry pair partition `{{i, 2n-1-i}}` of
/// `[2n]`: returns `(sgn(g), sgn-bar(g))`, the sign as a permutation of the
/// `2n` cards and the sign of the induced action on the `n` pairs.
pub fn sgn_and_sgnbar(g: &Permutation) -> Result<(i32, i32), BuildError> {
    let d = g.degree();
    assert!(d % 2 == 0, "B_n lives on an even number of points");
    let n = d / 2;
    let pair_of = |i: usize| i.min(d - 1 - i);
    let mut induced = vec![usize::MAX; n];
    for i in 0..d {
        let j = d - 1 - i;
        let (pi, pj) = (g.image(i), g.image(j));
        if pair_of(pi) != pair_of(pj) {
            return Err(BuildError::NotInBn { i, j });
        }
        induced[pair_of(i)] = pair_of(pi);
    }
    let bar = Permutation::from_images(induced).expect("induced map is a bijection");
    Ok((g.sign(), bar.sign()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn deck(k: usize, n: usize) -> DeckSpec {
        DeckSpec::new(k, n).unwrap()
    }

    #[test]
    fn deck_validation() {
        assert!(DeckSpec::new(2, 1).is_err());
        assert!(DeckSpec::new(1, 5).is_err());
        assert_eq!(deck(3, 4).degree(), 12);
    }

    #[test]
    fn standard_shuffle_examples() {
        assert_eq!(standard_shuffle(deck(3, 2)).images(), &[0, 3, 1, 4, 2, 5]);
        assert_eq!(
            standard_shuffle(deck(2, 4)).images(),
            &[0, 2, 4, 6, 1, 3, 5, 7]
        );
        for (k, n) in [(2, 2), (4, 5), (7, 3), (6, 6)] {
            let s = standard_shuffle(deck(k, n));
            assert_eq!(s.image(0), 0);
            assert_eq!(s.image(k * n - 1), k * n - 1);
        }
    }

    #[test]
    fn shuffle_cycle_types() {
        use std::collections::BTreeMap;
        assert_eq!(
            standard_shuffle(deck(3, 2)).cycle_type(),
            BTreeMap::from([(1, 2), (4, 1)])
        );
        assert_eq!(
            standard_shuffle(deck(2, 4)).cycle_type(),
            BTreeMap::from([(1, 2), (3, 2)])
        );
    }

    #[test]
    fn pile_perm_example() {
        let tau = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let rho = pile_perm(&tau, deck(3, 2)).unwrap();
        assert_eq!(rho.images(), &[2, 3, 0, 1, 4, 5]);
        let id = Permutation::identity(3);
        assert!(pile_perm(&id, deck(3, 2)).unwrap().is_identity());
        assert!(pile_perm(&tau, deck(4, 2)).is_err());
    }

    #[test]
    fn pile_perm_is_homomorphism() {
        let d = deck(5, 3);
        let t1 = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        let t2 = Permutation::parse_cycles(5, "(1 3)(2 4)").unwrap();
        let lhs = pile_perm(&t1, d)
            .unwrap()
            .compose(&pile_perm(&t2, d).unwrap())
            .unwrap();
        let rhs = pile_perm(&t1.compose(&t2).unwrap(), d).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(pile_perm(&t1, d).unwrap().inverse(), pile_perm(&t1.inverse(), d).unwrap());
    }

    #[test]
    fn elem_abelian_generators() {
        let spec = PileGroupSpec::new(PileFamily::ElemAbelian2 { t: 2 }, 4).unwrap();
        let gens = pile_group_generators(&spec).unwrap();
        assert_eq!(gens[0], Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap());
        assert_eq!(gens[1], Permutation::parse_cycles(4, "(0 2)(1 3)").unwrap());
        let spec3 = PileGroupSpec::new(PileFamily::ElemAbelian2 { t: 3 }, 8).unwrap();
        let v3 = PermGroup::new(8, pile_group_generators(&spec3).unwrap()).unwrap();
        assert_eq!(v3.order(), BigUint::from(8u32));
    }

    #[test]
    fn named_group_orders() {
        // |Sym(k)|, |Alt(k)|, |C_k| for a few k, including the even-k Alt gens.
        for k in 3..=8 {
            let sym = PermGroup::new(
                k,
                pile_group_generators(&PileGroupSpec::new(PileFamily::Sym, k).unwrap()).unwrap(),
            )
            .unwrap();
            assert_eq!(sym.order(), crate::bsgs::factorial(k), "Sym({k})");
            let alt = PermGroup::new(
                k,
                pile_group_generators(&PileGroupSpec::new(PileFamily::Alt, k).unwrap()).unwrap(),
            )
            .unwrap();
            assert_eq!(
                alt.order(),
                crate::bsgs::factorial(k) / BigUint::from(2u32),
                "Alt({k})"
            );
            let cyc = PermGroup::new(
                k,
                pile_group_generators(&PileGroupSpec::new(PileFamily::Cyclic, k).unwrap()).unwrap(),
            )
            .unwrap();
            assert_eq!(cyc.order(), BigUint::from(k), "C_{k}");
        }
    }

    #[test]
    fn affine_group_orders() {
        // |AGL(1,5)| = 20; |AGL(3,2)| = 1344; |AGL(2,3)| = 9·48 = 432.
        for (e, p, expect) in [(1u32, 5usize, 20u64), (3, 2, 1344), (2, 3, 432), (1, 7, 42)] {
            let k = pow(p, e);
            let spec = PileGroupSpec::new(PileFamily::Affine { e, p }, k).unwrap();
            let g = PermGroup::new(k, pile_group_generators(&spec).unwrap()).unwrap();
            assert_eq!(g.order(), BigUint::from(expect), "AGL({e},{p})");
        }
    }

    #[test]
    fn product_wreath_orders() {
        // |Sym(ℓ)≀Sym(e)| = (ℓ!)^e · e!.
        for (ell, e, expect) in [(2usize, 2u32, 8u64), (3, 2, 72), (2, 3, 48)] {
            let k = pow(ell, e);
            let spec = PileGroupSpec::new(PileFamily::ProductWreath { ell, e }, k).unwrap();
            let g = PermGroup::new(k, pile_group_generators(&spec).unwrap()).unwrap();
            assert_eq!(g.order(), BigUint::from(expect), "Sym({ell}) wr Sym({e})");
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            PileGroupSpec::parse("sym", 5).unwrap().family,
            PileFamily::Sym
        );
        assert_eq!(
            PileGroupSpec::parse("elem2:2", 4).unwrap().family,
            PileFamily::ElemAbelian2 { t: 2 }
        );
        assert_eq!(
            PileGroupSpec::parse("agl:1:5", 5).unwrap().family,
            PileFamily::Affine { e: 1, p: 5 }
        );
        assert_eq!(
            PileGroupSpec::parse("wreath:2:2", 4).unwrap().family,
            PileFamily::ProductWreath { ell: 2, e: 2 }
        );
        assert!(PileGroupSpec::parse("elem2:2", 5).is_err()); // 5 ≠ 2^2
        assert!(PileGroupSpec::parse("agl:1:4", 4).is_err()); // 4 not prime
        assert!(PileGroupSpec::parse("nope", 4).is_err());
        let s = PileGroupSpec::parse("wreath:3:2", 9).unwrap();
        assert_eq!(s.spec_string(), "wreath:3:2");
    }

    #[test]
    fn shuffle_group_small_orders() {
        let sym2 = PileGroupSpec::new(PileFamily::Sym, 2).unwrap();
        let g = shuffle_group(&sym2, deck(2, 4)).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32)); // C_2 ≀ C_3 in product action
        let sym4 = PileGroupSpec::new(PileFamily::Sym, 4).unwrap();
        let g = shuffle_group(&sym4, deck(4, 2)).unwrap();
        assert_eq!(g.order(), BigUint::from(1344u32)); // AGL(3,2)
    }

    #[test]
    fn parity_examples() {
        let sym4 = PileGroupSpec::new(PileFamily::Sym, 4).unwrap();
        assert!(parity_containment(&sym4, deck(4, 4)).unwrap());
        let sym3 = PileGroupSpec::new(PileFamily::Sym, 3).unwrap();
        assert!(!parity_containment(&sym3, deck(3, 2)).unwrap());
        let alt5 = PileGroupSpec::new(PileFamily::Alt, 5).unwrap();
        assert!(parity_containment(&alt5, deck(5, 5)).unwrap());
    }

    #[test]
    fn parity_agrees_with_generator_signs() {
        // parity_containment == every generator even, across families and sizes.
        for k in 2..=6 {
            for n in 2..=6 {
                for family in [PileFamily::Sym, PileFamily::Alt, PileFamily::Cyclic] {
                    let spec = PileGroupSpec::new(family, k).unwrap();
                    let g = shuffle_group(&spec, deck(k, n)).unwrap();
                    let all_even = g.generators().iter().all(|p| p.sign() == 1);
                    assert_eq!(
                        parity_containment(&spec, deck(k, n)).unwrap(),
                        all_even,
                        "k={k} n={n} spec={:?}",
                        spec.family
                    );
                }
            }
        }
    }

    #[test]
    fn sgn_and_sgnbar_examples() {
        assert_eq!(sgn_and_sgnbar(&Permutation::identity(6)).unwrap(), (1, 1));
        // The pair-swap (0 5) for n=3: one transposition, pairs fixed setwise.
        let swap = Permutation::parse_cycles(6, "(0 5)").unwrap();
        assert_eq!(sgn_and_sgnbar(&swap).unwrap(), (-1, 1));
        // A pair-breaking element errors.
        let bad = Permutation::parse_cycles(6, "(0 1)").unwrap();
        assert!(matches!(
            sgn_and_sgnbar(&bad),
            Err(BuildError::NotInBn { .. })
        ));
    }
}
