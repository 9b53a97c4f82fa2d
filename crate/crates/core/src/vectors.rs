//! h-vectors, c-vectors and the identities relating them to the face
//! vector.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::tiling::Tiling;

/// Tile counts of a tiling on a pure `n`-dimensional target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TilingVectors {
    pub n: usize,
    /// Tiles by order, `h_0..h_{n+1}`.
    pub h: Vec<i64>,
    /// Critical tiles by index, `c_0..c_n`.
    pub c: Vec<i64>,
    /// Faces of the target by dimension, `f_0..f_n`.
    pub f: Vec<i64>,
}

impl TilingVectors {
    /// `Σ (-1)^k c_k`, which equals the Euler characteristic of the target.
    pub fn euler_from_c(&self) -> i64 {
        alternating(&self.c)
    }

    pub fn euler_from_f(&self) -> i64 {
        alternating(&self.f)
    }
}

fn alternating(v: &[i64]) -> i64 {
    v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x } else { -x }).sum()
}

pub fn compute_vectors(t: &Tiling) -> Result<TilingVectors> {
    let target = t.target();
    if !target.is_pure() || target.dim() < 0 {
        return Err(Error::NotPure);
    }
    let n = target.dim() as usize;
    let mut h = vec![0i64; n + 2];
    let mut c = vec![0i64; n + 1];
    for tile in t.tiles() {
        if tile.dim() != n {
            return Err(Error::NotPure);
        }
        // a point has only the empty ridge, so its orders 0 and 1 coincide
        h[if n == 0 { 1 } else { tile.order() }] += 1;
        if let Some(k) = tile.critical_index() {
            c[k] += 1;
        }
    }
    let mut f: Vec<i64> = target.f_vector().into_iter().map(|x| x as i64).collect();
    f.resize(n + 1, 0);
    Ok(TilingVectors { n, h, c, f })
}

/// Both sides of an identity and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
}

/// `Σ h_k X^k (X+1)^{n+1-k} = X Σ f_k X^k + Σ_{k ≤ n-1} c_k X^k`.
pub fn check_h_identity(v: &TilingVectors) -> IdentityCheck {
    let n = v.n;
    let x1 = IntPolynomial::linear(1, 1);
    let lhs: IntPolynomial = v
        .h
        .iter()
        .enumerate()
        .map(|(k, &hk)| &IntPolynomial::monomial(hk, k) * &x1.pow((n + 1 - k) as u32))
        .sum();
    let f_part: IntPolynomial = v.f.iter().enumerate().map(|(k, &fk)| IntPolynomial::monomial(fk, k + 1)).sum();
    let c_part: IntPolynomial = v.c.iter().take(n).enumerate().map(|(k, &ck)| IntPolynomial::monomial(ck, k)).sum();
    let rhs = &f_part + &c_part;
    IdentityCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeCheck {
    pub holds: bool,
    /// Twice the tested polynomial.
    pub doubled: IntPolynomial,
    /// Degree about which it is reflected.
    pub degree: usize,
}

/// `Σ_{k=2}^{n+1} c_{n+1-k} (X-1)^k`.
fn critical_part(v: &TilingVectors) -> IntPolynomial {
    let xm1 = IntPolynomial::linear(-1, 1);
    (2..=v.n + 1)
        .map(|k| xm1.pow(k as u32).scale(v.c[v.n + 1 - k]))
        .sum()
}

/// Twice `Σ h_k X^k + Σ_{k=2}^{n+1} c_{n+1-k}(X-1)^k + ½χ(1-X)^{n+1}`.
pub fn doubled_palindromic_polynomial(v: &TilingVectors, chi: i64) -> IntPolynomial {
    let h = IntPolynomial::new(v.h.clone());
    let e = IntPolynomial::linear(1, -1).pow((v.n + 1) as u32).scale(chi);
    &(&h + &critical_part(v)).scale(2) + &e
}

/// Palindromy test for tilings of homology manifolds of Euler
/// characteristic `chi`.
pub fn check_palindromic(v: &TilingVectors, chi: i64) -> Result<PalindromeCheck> {
    if v.n % 2 == 0 && chi % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "odd Euler characteristic {chi} in even dimension {}",
            v.n
        )));
    }
    let doubled = doubled_palindromic_polynomial(v, chi);
    let degree = v.n + 1;
    Ok(PalindromeCheck {
        holds: doubled.is_palindromic(degree),
        doubled,
        degree,
    })
}

/// Outcome of the four weighted-sum relations. `None` marks a relation
/// that does not apply in this dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub items: [Option<bool>; 4],
    pub lhs: [i64; 4],
    pub rhs: [i64; 4],
}

impl CorollaryCheck {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.unwrap_or(true))
    }
}

/// `Σ_k k^p (h_k - h_{n+1-k})`.
pub fn h_moment(v: &TilingVectors, p: u32) -> i64 {
    let n = v.n;
    (0..=n + 1)
        .map(|k| (k as i64).pow(p) * (v.h[k] - v.h[n + 1 - k]))
        .sum()
}

/// Closed-form right-hand side of the `p`-th relation. The last term is the
/// contribution of `½χ(1-X)^{n+1}`, which vanishes unless `n` is even and
/// `p ≥ n+1`.
pub fn corollary_rhs(n: usize, c: &[i64], p: u32) -> i64 {
    let at = |i: isize| if i >= 0 { c.get(i as usize).copied().unwrap_or(0) } else { 0 };
    let n_i = n as isize;
    let core = (n_i as i64 - 1) * at(n_i - 1) - 2 * at(n_i - 2);
    let base = match p {
        1 | 2 => 0,
        3 => 6 * core,
        4 => 12 * (n as i64 + 1) * core,
        _ => unreachable!("only the first four moments have closed forms"),
    };
    let correction = if n % 2 == 0 {
        let chi = alternating(c);
        -chi * IntPolynomial::linear(1, -1).pow((n + 1) as u32).moment(p)
    } else {
        0
    };
    base + correction
}

/// The four weighted sums of `h_k - h_{n+1-k}` against their closed forms,
/// with `χ` taken as `Σ (-1)^k c_k`.
pub fn check_corollary_identities(v: &TilingVectors) -> CorollaryCheck {
    let mut items = [None; 4];
    let mut lhs = [0; 4];
    let mut rhs = [0; 4];
    for p in 1..=4u32 {
        let i = (p - 1) as usize;
        lhs[i] = h_moment(v, p);
        rhs[i] = corollary_rhs(v.n, &v.c, p);
        if p != 3 || v.n > 2 {
            items[i] = Some(lhs[i] == rhs[i]);
        }
    }
    CorollaryCheck { items, lhs, rhs }
}

/// Plain-text report with a stable field order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorsReport {
    pub vectors: TilingVectors,
    pub identity: IdentityCheck,
    pub euler: i64,
    pub palindromic: Option<PalindromeCheck>,
    pub corollary: Option<CorollaryCheck>,
}

impl VectorsReport {
    /// `manifold` asserts the target is a closed homology manifold, which
    /// enables the palindromic and weighted-sum checks.
    pub fn build(t: &Tiling, manifold: bool) -> Result<Self> {
        let vectors = compute_vectors(t)?;
        let identity = check_h_identity(&vectors);
        let euler = t.target().euler_characteristic();
        let (palindromic, corollary) = if manifold {
            (
                Some(check_palindromic(&vectors, euler)?),
                Some(check_corollary_identities(&vectors)),
            )
        } else {
            (None, None)
        };
        Ok(VectorsReport {
            vectors,
            identity,
            euler,
            palindromic,
            corollary,
        })
    }

    pub fn passed(&self) -> bool {
        self.identity.holds
            && self.vectors.euler_from_c() == self.euler
            && self.palindromic.as_ref().map_or(true, |p| p.holds)
            && self.corollary.as_ref().map_or(true, CorollaryCheck::all_hold)
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn list(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for VectorsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "h = {}", list(&self.vectors.h))?;
        writeln!(f, "c = {}", list(&self.vectors.c))?;
        writeln!(f, "f = {}", list(&self.vectors.f))?;
        writeln!(f, "identity_h = {}", verdict(self.identity.holds))?;
        writeln!(f, "identity_lhs = {}", self.identity.lhs)?;
        writeln!(f, "identity_rhs = {}", self.identity.rhs)?;
        writeln!(f, "euler = {}", self.euler)?;
        writeln!(
            f,
            "euler_from_c = {} (partial evidence)",
            verdict(self.vectors.euler_from_c() == self.euler)
        )?;
        match &self.palindromic {
            Some(p) => {
                writeln!(f, "palindromic = {}", verdict(p.holds))?;
                writeln!(f, "palindromic_doubled = {}", p.doubled)?;
            }
            None => writeln!(f, "palindromic = n/a")?,
        }
        match &self.corollary {
            Some(c) => {
                let items: Vec<&str> = c.items.iter().map(|i| i.map_or("n/a", verdict)).collect();
                writeln!(f, "corollary = [{}]", items.join(", "))
            }
            None => writeln!(f, "corollary = n/a"),
        }
    }
}
