use std::fmt;

use serde::{Deserialize, Serialize};

/// The groups that occur as outer automorphism groups: {1}, ℤ₂, ℤ₃, 𝔖₃.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    Trivial,
    Z2,
    Z3,
    S3,
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match self {
            Self::Trivial => 1,
            Self::Z2 => 2,
            Self::Z3 => 3,
            Self::S3 => 6,
        }
    }

    /// Generator names in the order the action stores them.
    pub fn generator_names(&self) -> &'static [&'static str] {
        match self {
            Self::Trivial => &[],
            Self::Z2 => &["tau"],
            Self::Z3 => &["sigma"],
            Self::S3 => &["sigma", "tau"],
        }
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let (s, t) = match self {
            Self::Trivial => (1, 1),
            Self::Z2 => (1, 2),
            Self::Z3 => (3, 1),
            Self::S3 => (3, 2),
        };
        (0..t)
            .flat_map(|b| (0..s).map(move |a| GroupElement { sigma: a, tau: b }))
            .collect()
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        self.generator_names()
            .iter()
            .map(|n| match *n {
                "sigma" => GroupElement::SIGMA,
                _ => GroupElement::TAU,
            })
            .collect()
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Trivial => "1",
            Self::Z2 => "Z2",
            Self::Z3 => "Z3",
            Self::S3 => "S3",
        })
    }
}

/// σ^sigma · τ^tau in 𝔖₃ = ⟨σ, τ | σ³, τ², τσ = σ²τ⟩.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub sigma: u8,
    pub tau: u8,
}

impl GroupElement {
    pub const ID: Self = Self { sigma: 0, tau: 0 };
    pub const SIGMA: Self = Self { sigma: 1, tau: 0 };
    pub const TAU: Self = Self { sigma: 0, tau: 1 };

    pub fn mul(self, o: Self) -> Self {
        // τ^b σ^c = σ^{±c} τ^b
        let c = if self.tau == 1 {
            (3 - o.sigma) % 3
        } else {
            o.sigma
        };
        Self {
            sigma: (self.sigma + c) % 3,
            tau: (self.tau + o.tau) % 2,
        }
    }

    pub fn inverse(self) -> Self {
        if self.tau == 1 {
            self
        } else {
            Self {
                sigma: (3 - self.sigma) % 3,
                tau: 0,
            }
        }
    }

    pub fn pow(self, n: u32) -> Self {
        (0..n).fold(Self::ID, |acc, _| acc.mul(self))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.sigma, self.tau) {
            (0, 0) => write!(f, "1"),
            (s, 0) => write!(f, "sigma^{s}"),
            (0, _) => write!(f, "tau"),
            (s, _) => write!(f, "sigma^{s}*tau"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_relations() {
        let (s, t) = (GroupElement::SIGMA, GroupElement::TAU);
        assert_eq!(s.pow(3), GroupElement::ID);
        assert_eq!(t.pow(2), GroupElement::ID);
        assert_eq!(t.mul(s), s.pow(2).mul(t));
        assert_eq!(s.mul(t), t.mul(s.pow(2)));
        let els = GroupKind::S3.elements();
        assert_eq!(els.len(), 6);
        for a in &els {
            assert_eq!(a.mul(a.inverse()), GroupElement::ID);
            for b in &els {
                for c in &els {
                    assert_eq!(a.mul(*b).mul(*c), a.mul(b.mul(*c)));
                }
            }
        }
    }
}
