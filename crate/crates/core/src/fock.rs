//! Sparse state vectors over mixed fermionic/bosonic occupation bases.
//!
//! A [`StateVector`] stores complex amplitudes keyed by [`BasisKet`]s in
//! lexicographic order. Ladder operators act on one mode at a time; fermionic
//! operators pick up the Jordan-Wigner sign `(-1)^k`, where `k` counts the
//! occupied fermionic modes with a smaller index. Bosonic modes carry a
//! cutoff and kets raised above it are dropped, so any result confined to
//! total occupation `N` is exact whenever every cutoff is at least `N`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Amplitudes smaller than this fraction of the largest amplitude are dropped.
pub const PRUNE_RELATIVE: f64 = 1e-14;

/// Tolerance on `|norm² - 1|` for a state to count as normalized.
pub const NORMALIZED_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeKind {
    Fermionic,
    Bosonic,
}

/// Statistics and maximum occupation of a single mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawModeSpec")]
pub struct ModeSpec {
    kind: ModeKind,
    cutoff: u32,
}

#[derive(Deserialize)]
struct RawModeSpec {
    kind: ModeKind,
    cutoff: u32,
}

impl TryFrom<RawModeSpec> for ModeSpec {
    type Error = Error;

    fn try_from(raw: RawModeSpec) -> Result<Self> {
        ModeSpec::new(raw.kind, raw.cutoff)
    }
}

impl ModeSpec {
    pub fn new(kind: ModeKind, cutoff: u32) -> Result<Self> {
        if kind == ModeKind::Fermionic && cutoff != 1 {
            return Err(Error::InvalidModeSpec(format!(
                "fermionic mode must have cutoff 1, got {cutoff}"
            )));
        }
        Ok(Self { kind, cutoff })
    }

    pub const fn fermionic() -> Self {
        Self {
            kind: ModeKind::Fermionic,
            cutoff: 1,
        }
    }

    pub const fn bosonic(cutoff: u32) -> Self {
        Self {
            kind: ModeKind::Bosonic,
            cutoff,
        }
    }

    pub fn kind(&self) -> ModeKind {
        self.kind
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn is_fermionic(&self) -> bool {
        self.kind == ModeKind::Fermionic
    }
}

/// Occupation numbers, one per mode. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKet(Vec<u32>);

impl BasisKet {
    pub fn new(occupations: Vec<u32>) -> Self {
        Self(occupations)
    }

    pub fn occupations(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn fits(&self, modes: &[ModeSpec]) -> bool {
        self.0.len() == modes.len() && self.0.iter().zip(modes).all(|(&n, m)| n <= m.cutoff)
    }
}

impl From<Vec<u32>> for BasisKet {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for BasisKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ">")
    }
}

/// Sparse superposition of occupation kets.
///
/// Values are immutable: every operation returns a new state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateFile", into = "StateFile")]
pub struct StateVector {
    modes: Vec<ModeSpec>,
    amplitudes: BTreeMap<BasisKet, Complex64>,
}

impl StateVector {
    fn check_modes(modes: &[ModeSpec]) -> Result<()> {
        if modes.is_empty() {
            return Err(Error::EmptyModes);
        }
        Ok(())
    }

    /// The all-zero occupation ket with unit amplitude.
    pub fn vacuum(modes: &[ModeSpec]) -> Result<Self> {
        Self::basis(modes, vec![0; modes.len()])
    }

    /// The zero vector (no stored kets).
    pub fn zero(modes: &[ModeSpec]) -> Result<Self> {
        Self::check_modes(modes)?;
        Ok(Self {
            modes: modes.to_vec(),
            amplitudes: BTreeMap::new(),
        })
    }

    /// A single normalized occupation ket.
    pub fn basis(modes: &[ModeSpec], occupations: Vec<u32>) -> Result<Self> {
        Self::from_amplitudes(modes, [(occupations, Complex64::new(1.0, 0.0))])
    }

    /// Builds a state from `(occupations, amplitude)` pairs. Repeated kets are
    /// summed; kets violating a cutoff are rejected.
    pub fn from_amplitudes<I>(modes: &[ModeSpec], entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Complex64)>,
    {
        Self::check_modes(modes)?;
        let mut amplitudes = BTreeMap::new();
        for (occ, amp) in entries {
            let ket = BasisKet(occ);
            if ket.0.len() != modes.len() {
                return Err(Error::LengthMismatch {
                    expected: modes.len(),
                    got: ket.0.len(),
                });
            }
            if !ket.fits(modes) {
                return Err(Error::CutoffViolation { occ: ket.0 });
            }
            *amplitudes.entry(ket).or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        Ok(Self::assemble(modes.to_vec(), amplitudes))
    }

    fn assemble(modes: Vec<ModeSpec>, mut amplitudes: BTreeMap<BasisKet, Complex64>) -> Self {
        let max = amplitudes.values().map(|a| a.norm()).fold(0.0, f64::max);
        let floor = max * PRUNE_RELATIVE;
        amplitudes.retain(|_, a| a.norm() > floor);
        Self { modes, amplitudes }
    }

    pub fn modes(&self) -> &[ModeSpec] {
        &self.modes
    }

    /// Stored `(ket, amplitude)` pairs in lexicographic ket order.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisKet, &Complex64)> {
        self.amplitudes.iter()
    }

    pub fn amplitude(&self, occupations: &[u32]) -> Complex64 {
        self.amplitudes
            .get(&BasisKet(occupations.to_vec()))
            .copied()
            .unwrap_or_default()
    }

    /// Number of stored kets.
    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_squared() - 1.0).abs() <= NORMALIZED_TOL
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(self.scale(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .map(|(k, a)| (k.clone(), a * factor))
            .collect();
        Self::assemble(self.modes.clone(), amplitudes)
    }

    fn same_modes(&self, other: &Self) -> Result<()> {
        if self.modes != other.modes {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &Self, factor: Complex64) -> Result<Self> {
        self.same_modes(other)?;
        let mut amplitudes = self.amplitudes.clone();
        for (k, a) in &other.amplitudes {
            *amplitudes.entry(k.clone()).or_default() += a * factor;
        }
        Ok(Self::assemble(self.modes.clone(), amplitudes))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, Complex64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, Complex64::new(-1.0, 0.0))
    }

    /// Euclidean distance `‖self - other‖`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        self.same_modes(other)?;
        let mut total = 0.0;
        for (k, a) in &self.amplitudes {
            let b = other.amplitudes.get(k).copied().unwrap_or_default();
            total += (a - b).norm_sqr();
        }
        for (k, b) in &other.amplitudes {
            if !self.amplitudes.contains_key(k) {
                total += b.norm_sqr();
            }
        }
        Ok(total.sqrt())
    }

    /// `min_α ‖self - e^{iα} other‖`, evaluated componentwise after aligning
    /// the phase so that small residuals keep full relative precision.
    pub fn distance_up_to_phase(&self, other: &Self) -> Result<f64> {
        let overlap = other.inner_product(self)?;
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.distance(&other.scale(phase))
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        self.same_modes(other)?;
        let (small, large, conj_small) = if self.len() <= other.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, a) in &small.amplitudes {
            if let Some(b) = large.amplitudes.get(k) {
                acc += if conj_small { a.conj() * b } else { b.conj() * a };
            }
        }
        Ok(acc)
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.modes.len() {
            return Err(Error::ModeIndex {
                index: mode,
                len: self.modes.len(),
            });
        }
        Ok(())
    }

    fn jordan_wigner_sign(&self, occ: &[u32], mode: usize) -> f64 {
        let occupied = self.modes[..mode]
            .iter()
            .zip(occ)
            .filter(|(m, &n)| m.is_fermionic() && n == 1)
            .count();
        if occupied % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Adds `factor * a†_mode |self⟩` into `out`.
    fn accumulate_creation(
        &self,
        mode: usize,
        factor: Complex64,
        out: &mut BTreeMap<BasisKet, Complex64>,
    ) {
        let spec = self.modes[mode];
        for (ket, amp) in &self.amplitudes {
            let n = ket.0[mode];
            if n + 1 > spec.cutoff {
                continue;
            }
            let coeff = match spec.kind {
                ModeKind::Bosonic => f64::from(n + 1).sqrt(),
                ModeKind::Fermionic => self.jordan_wigner_sign(&ket.0, mode),
            };
            let mut raised = ket.0.clone();
            raised[mode] = n + 1;
            *out.entry(BasisKet(raised)).or_default() += amp * factor * coeff;
        }
    }

    /// Applies the creation operator of `mode`. Bosonic kets pushed above the
    /// cutoff are dropped.
    pub fn apply_creation(&self, mode: usize) -> Result<Self> {
        self.check_mode(mode)?;
        let mut out = BTreeMap::new();
        self.accumulate_creation(mode, Complex64::new(1.0, 0.0), &mut out);
        Ok(Self::assemble(self.modes.clone(), out))
    }

    pub fn apply_annihilation(&self, mode: usize) -> Result<Self> {
        self.check_mode(mode)?;
        let spec = self.modes[mode];
        let mut out = BTreeMap::new();
        for (ket, amp) in &self.amplitudes {
            let n = ket.0[mode];
            if n == 0 {
                continue;
            }
            let coeff = match spec.kind {
                ModeKind::Bosonic => f64::from(n).sqrt(),
                ModeKind::Fermionic => self.jordan_wigner_sign(&ket.0, mode),
            };
            let mut lowered = ket.0.clone();
            lowered[mode] = n - 1;
            out.insert(BasisKet(lowered), amp * coeff);
        }
        Ok(Self::assemble(self.modes.clone(), out))
    }

    /// Applies `Σ_j weights[j] a†_j` once.
    pub fn apply_mixed_creation(&self, weights: &[Complex64]) -> Result<Self> {
        if weights.len() != self.modes.len() {
            return Err(Error::LengthMismatch {
                expected: self.modes.len(),
                got: weights.len(),
            });
        }
        let mut out = BTreeMap::new();
        for (mode, &w) in weights.iter().enumerate() {
            if w != Complex64::new(0.0, 0.0) {
                self.accumulate_creation(mode, w, &mut out);
            }
        }
        Ok(Self::assemble(self.modes.clone(), out))
    }

    /// Applies `Σ_k coefficients[k] (Σ_j weights[j] a†_j)^k`.
    pub fn apply_creation_polynomial(
        &self,
        weights: &[Complex64],
        coefficients: &[Complex64],
    ) -> Result<Self> {
        let mut power = self.clone();
        let mut acc = Self::zero(&self.modes)?;
        for (k, &c) in coefficients.iter().enumerate() {
            if k > 0 {
                power = power.apply_mixed_creation(weights)?;
            }
            if c != Complex64::new(0.0, 0.0) {
                acc = acc.add_scaled(&power, c)?;
            }
        }
        Ok(acc)
    }

    /// Fixes the global phase so the amplitude of the lexicographically first
    /// stored ket is real and positive.
    pub fn canonical_phase(&self) -> Result<Self> {
        let (lead_ket, lead) = self.amplitudes.iter().next().ok_or(Error::ZeroState)?;
        let magnitude = lead.norm();
        let phase = lead.conj() / magnitude;
        let mut out = self.scale(phase);
        if let Some(a) = out.amplitudes.get_mut(lead_ket) {
            *a = Complex64::new(magnitude, 0.0);
        }
        Ok(out)
    }

    /// Restriction to kets whose occupations sum to `total`.
    pub fn fixed_number_sector(&self, total: u32) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .filter(|(k, _)| k.total() == total)
            .map(|(k, a)| (k.clone(), *a))
            .collect();
        Self {
            modes: self.modes.clone(),
            amplitudes,
        }
    }

    /// Distinct total occupations present, ascending.
    pub fn sectors(&self) -> Vec<u32> {
        let mut totals: Vec<u32> = self.amplitudes.keys().map(BasisKet::total).collect();
        totals.sort_unstable();
        totals.dedup();
        totals
    }

    /// The single sector the state lives in, if any.
    pub fn single_sector(&self) -> Result<u32> {
        match self.sectors().as_slice() {
            [] => Err(Error::ZeroState),
            [n] => Ok(*n),
            _ => Err(Error::MultipleSectors),
        }
    }

    /// Copies amplitudes onto a new mode list of the same length. Kets that do
    /// not fit the new cutoffs are rejected.
    pub fn relabel_modes(&self, modes: &[ModeSpec]) -> Result<Self> {
        Self::from_amplitudes(
            modes,
            self.amplitudes.iter().map(|(k, a)| (k.0.clone(), *a)),
        )
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, a)) in self.amplitudes.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.6}{:+.6}i){k}", a.re, a.im)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AmplitudeEntry {
    occ: Vec<u32>,
    re: f64,
    im: f64,
}

/// On-disk layout: modes plus amplitudes in lexicographic ket order.
#[derive(Serialize, Deserialize)]
struct StateFile {
    modes: Vec<ModeSpec>,
    amplitudes: Vec<AmplitudeEntry>,
}

impl TryFrom<StateFile> for StateVector {
    type Error = Error;

    fn try_from(file: StateFile) -> Result<Self> {
        StateVector::from_amplitudes(
            &file.modes,
            file.amplitudes
                .into_iter()
                .map(|e| (e.occ, Complex64::new(e.re, e.im))),
        )
    }
}

impl From<StateVector> for StateFile {
    fn from(state: StateVector) -> Self {
        StateFile {
            amplitudes: state
                .amplitudes
                .into_iter()
                .map(|(k, a)| AmplitudeEntry {
                    occ: k.0,
                    re: a.re,
                    im: a.im,
                })
                .collect(),
            modes: state.modes,
        }
    }
}
