//! Geometry of the star and ring layouts.
//!
//! `N` parties sit on a circle of radius `R`, labelled `1..=N` in order around
//! it. A star joins every party to a hub at the centre; a ring joins each party
//! to its two neighbours. The *wirelength* is the shortest channel of a layout:
//! party-to-hub for the star, neighbour-to-neighbour for the ring.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutKind {
    Star,
    Ring,
}

impl fmt::Display for LayoutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayoutKind::Star => f.write_str("star"),
            LayoutKind::Ring => f.write_str("ring"),
        }
    }
}

/// Which layout comes out ahead in a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Star,
    Ring,
    Tie,
}

impl Winner {
    /// Larger-is-better classification with an absolute tie band.
    pub fn by_larger(star: f64, ring: f64, tolerance: f64) -> Winner {
        if (ring - star).abs() <= tolerance {
            Winner::Tie
        } else if ring > star {
            Winner::Ring
        } else {
            Winner::Star
        }
    }

    /// Smaller-is-better classification, used for wire totals.
    pub fn by_smaller(star: f64, ring: f64, tolerance: f64) -> Winner {
        Winner::by_larger(-star, -ring, tolerance)
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::Star => f.write_str("star"),
            Winner::Ring => f.write_str("ring"),
            Winner::Tie => f.write_str("tie"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkLayout {
    kind: LayoutKind,
    n_parties: usize,
    radius: f64,
}

impl NetworkLayout {
    pub fn new(kind: LayoutKind, n_parties: usize, radius: f64) -> Result<Self> {
        check_parties(n_parties)?;
        check_radius(radius)?;
        Ok(Self {
            kind,
            n_parties,
            radius,
        })
    }

    pub fn star(n_parties: usize, radius: f64) -> Result<Self> {
        Self::new(LayoutKind::Star, n_parties, radius)
    }

    pub fn ring(n_parties: usize, radius: f64) -> Result<Self> {
        Self::new(LayoutKind::Ring, n_parties, radius)
    }

    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Length of one channel segment: `R` for the star, the chord
    /// `2R sin(π/N)` for the ring.
    pub fn wirelength(&self) -> f64 {
        match self.kind {
            LayoutKind::Star => self.radius,
            LayoutKind::Ring => ring_chord(self.n_parties, self.radius),
        }
    }

    /// Route between parties `i` and `j` (1-based). Ring routes take the
    /// shorter way round.
    pub fn path(&self, i: usize, j: usize) -> Result<PathSpec> {
        for index in [i, j] {
            if index == 0 || index > self.n_parties {
                return Err(Error::PartyOutOfRange {
                    index,
                    n_parties: self.n_parties,
                });
            }
        }
        if i == j {
            return Err(Error::SelfPair(i));
        }
        let hops = match self.kind {
            LayoutKind::Star => 2,
            LayoutKind::Ring => {
                let sep = i.abs_diff(j);
                sep.min(self.n_parties - sep)
            }
        };
        PathSpec::new(self.wirelength(), hops)
    }

    /// Total wire needed to build the layout: `N` spokes or `N` chords.
    pub fn total_wire(&self) -> f64 {
        self.n_parties as f64 * self.wirelength()
    }
}

/// Wirelength `d` and hop count `n` between two parties.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathSpec {
    wirelength: f64,
    hops: usize,
}

impl PathSpec {
    pub fn new(wirelength: f64, hops: usize) -> Result<Self> {
        if !(wirelength > 0.0 && wirelength.is_finite()) {
            return Err(Error::InvalidLength(wirelength));
        }
        if hops == 0 {
            return Err(Error::ZeroHops);
        }
        Ok(Self { wirelength, hops })
    }

    pub fn wirelength(&self) -> f64 {
        self.wirelength
    }

    pub fn hops(&self) -> usize {
        self.hops
    }

    /// End-to-end channel length `n·d`.
    pub fn span(&self) -> f64 {
        self.hops as f64 * self.wirelength
    }
}

/// Shortest-path multiplicities for averaging over a ring.
///
/// From any fixed party, hop counts `1..=u_bound` are each reached in both
/// directions; when `N` is even the antipodal party (`N/2` hops) is reached
/// once more, flagged by `mu = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingWeights {
    pub u_bound: usize,
    pub mu: usize,
}

impl RingWeights {
    /// `(hops, multiplicity)` for every partner of a fixed party. The
    /// multiplicities sum to `N − 1`.
    pub fn hop_multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let antipode = (self.mu == 1).then_some((self.u_bound + 1, 1));
        (1..=self.u_bound).map(|n| (n, 2)).chain(antipode)
    }
}

pub fn ring_weights(n_parties: usize) -> Result<RingWeights> {
    check_parties(n_parties)?;
    Ok(if n_parties % 2 == 1 {
        RingWeights {
            u_bound: (n_parties - 1) / 2,
            mu: 0,
        }
    } else {
        RingWeights {
            u_bound: n_parties / 2 - 1,
            mu: 1,
        }
    })
}

/// Neighbour chord `2R sin(π/N)`.
pub fn ring_chord(n_parties: usize, radius: f64) -> f64 {
    2.0 * radius * (PI / n_parties as f64).sin()
}

/// The classical criterion: whichever layout needs less wire wins.
///
/// Totals within `1e-12·N·R` of each other are a tie; at `N = 6` the hexagon
/// side equals the radius so the two totals agree exactly.
pub fn classical_winner(n_parties: usize, radius: f64) -> Result<Winner> {
    let star = NetworkLayout::star(n_parties, radius)?.total_wire();
    let ring = NetworkLayout::ring(n_parties, radius)?.total_wire();
    let tolerance = 1e-12 * n_parties as f64 * radius;
    Ok(Winner::by_smaller(star, ring, tolerance))
}

fn check_parties(n_parties: usize) -> Result<()> {
    if n_parties < 2 {
        Err(Error::TooFewParties(n_parties))
    } else {
        Ok(())
    }
}

fn check_radius(radius: f64) -> Result<()> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidRadius(radius))
    }
}
