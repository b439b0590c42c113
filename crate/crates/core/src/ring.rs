//! Exact arithmetic in rings of the form `Z_{m1} x ... x Z_{mk}`, where a
//! modulus of `0` stands for a factor `Z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    moduli: Vec<u64>,
}

/// An element of a [`RingSpec`], reduced coordinatewise into `[0, m)` for
/// finite factors. The canonical form makes `==` ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coords: Vec<BigInt>,
}

impl RingElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Coordinates as machine integers, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}", self.coords[0])
        } else {
            let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl RingSpec {
    pub fn new(moduli: Vec<u64>) -> Result<RingSpec> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("at least one factor is required".into()));
        }
        if let Some(m) = moduli.iter().find(|&&m| m == 1) {
            return Err(Error::InvalidRing(format!(
                "modulus {m} is not allowed (use 0 for Z or >= 2)"
            )));
        }
        Ok(RingSpec { moduli })
    }

    /// `Z`.
    pub fn integers() -> RingSpec {
        RingSpec { moduli: vec![0] }
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Result<RingSpec> {
        RingSpec::new(vec![n])
    }

    /// Parses `Z`, `Z<n>`, or products joined by `x` (case-insensitive).
    pub fn parse(s: &str) -> Result<RingSpec> {
        let lower = s.trim().to_ascii_lowercase();
        if lower.is_empty() {
            return Err(Error::InvalidRing("empty ring spec".into()));
        }
        let mut moduli = Vec::new();
        for part in lower.split('x') {
            let digits = part
                .strip_prefix('z')
                .ok_or_else(|| Error::InvalidRing(format!("factor `{part}` must start with Z")))?;
            if digits.is_empty() {
                moduli.push(0);
            } else {
                let m: u64 = digits
                    .parse()
                    .map_err(|_| Error::InvalidRing(format!("bad modulus in `{part}`")))?;
                if m < 2 {
                    return Err(Error::InvalidRing(format!("modulus must be >= 2 in `{part}`")));
                }
                moduli.push(m);
            }
        }
        RingSpec::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn factor_count(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&m| m != 0)
    }

    /// lcm of the moduli, or `0` when a `Z` factor is present.
    pub fn characteristic(&self) -> u64 {
        if !self.is_finite() {
            return 0;
        }
        self.moduli.iter().fold(1u64, |acc, &m| acc.lcm(&m))
    }

    pub fn cardinality(&self) -> Option<u128> {
        if !self.is_finite() {
            return None;
        }
        self.moduli
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(u128::from(m)))
    }

    pub fn is_power_of_z2(&self) -> bool {
        self.moduli.iter().all(|&m| m == 2)
    }

    pub fn contains_z_factor(&self) -> bool {
        self.moduli.contains(&0)
    }

    fn reduce(&self, coords: Vec<BigInt>) -> RingElement {
        let coords = coords
            .into_iter()
            .zip(&self.moduli)
            .map(|(c, &m)| {
                if m == 0 {
                    c
                } else {
                    c.mod_floor(&BigInt::from(m))
                }
            })
            .collect();
        RingElement { coords }
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if x.coords.len() != self.moduli.len() {
            return Err(Error::RingMismatch(format!(
                "element {x} has {} coordinates, ring {self} has {} factors",
                x.coords.len(),
                self.moduli.len()
            )));
        }
        Ok(())
    }

    /// Builds an element from integer coordinates, reducing them.
    pub fn element(&self, coords: &[i64]) -> Result<RingElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::RingMismatch(format!(
                "{} coordinates given for ring {self}",
                coords.len()
            )));
        }
        Ok(self.reduce(coords.iter().map(|&c| BigInt::from(c)).collect()))
    }

    pub fn element_big(&self, coords: Vec<BigInt>) -> Result<RingElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::RingMismatch(format!(
                "{} coordinates given for ring {self}",
                coords.len()
            )));
        }
        Ok(self.reduce(coords))
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: vec![BigInt::zero(); self.moduli.len()],
        }
    }

    pub fn one(&self) -> RingElement {
        RingElement {
            coords: vec![BigInt::one(); self.moduli.len()],
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.reduce(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect()))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.reduce(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect()))
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        Ok(self.reduce(a.coords.iter().map(|x| -x).collect()))
    }

    pub fn scalar_mul(&self, n: i64, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        let n = BigInt::from(n);
        Ok(self.reduce(a.coords.iter().map(|x| x * &n).collect()))
    }

    pub fn equals(&self, a: &RingElement, b: &RingElement) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    /// The image `d * 1` of an integer.
    pub fn int_embed(&self, d: i64) -> RingElement {
        self.reduce(vec![BigInt::from(d); self.moduli.len()])
    }

    /// Whether `d * 1 = 0`, without building the element.
    pub fn int_is_zero(&self, d: i64) -> bool {
        match self.characteristic() {
            0 => d == 0,
            p => d.unsigned_abs().is_multiple_of(p),
        }
    }

    /// All elements, first coordinate most significant.
    pub fn elements(&self) -> Result<Elements> {
        if !self.is_finite() {
            return Err(Error::InfiniteRing(self.to_string()));
        }
        Ok(Elements {
            moduli: self.moduli.clone(),
            next: Some(vec![0; self.moduli.len()]),
        })
    }

    /// Whether `sub` embeds into `self` as a subring by modulus divisibility
    /// across matching factor lists (`Z_m` sits in `Z_n` as multiples of
    /// `n/m` when `m | n`; `Z` only matches `Z`).
    pub fn has_divisibility_subring(&self, sub: &RingSpec) -> bool {
        self.moduli.len() == sub.moduli.len()
            && self
                .moduli
                .iter()
                .zip(&sub.moduli)
                .all(|(&n, &m)| match (n, m) {
                    (0, 0) => true,
                    (0, _) | (_, 0) => false,
                    (n, m) => n % m == 0,
                })
    }

    /// Checks that the element's coordinates are reduced for this ring.
    pub fn contains(&self, x: &RingElement) -> bool {
        x.coords.len() == self.moduli.len()
            && x.coords.iter().zip(&self.moduli).all(|(c, &m)| {
                m == 0 || (!c.is_negative() && c < &BigInt::from(m))
            })
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .moduli
            .iter()
            .map(|&m| if m == 0 { "Z".to_string() } else { format!("Z{m}") })
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

pub struct Elements {
    moduli: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        let mut carried_out = true;
        while pos > 0 {
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.moduli[pos] {
                carried_out = false;
                break;
            }
            succ[pos] = 0;
        }
        if !carried_out {
            self.next = Some(succ);
        }
        Some(RingElement {
            coords: cur.into_iter().map(BigInt::from).collect(),
        })
    }
}
