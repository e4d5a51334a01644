//! Recovering the sextuple from the four special Pascals.
//!
//! Stage one turns the pairwise intersections `mu_i` of `l1, l2, l3` into the
//! three chords `AE`, `CD`, `BF` via [`psi`]. Stage two uses `l*` to pin one
//! endpoint of each chord: the quadratic identity behind [`stage2_m_n`] gives
//! a 3x3 matrix `Z` with `Z (1, x, x^2)^T = 0`, and the partner endpoint falls
//! out of an exact division of the chord by the recovered linear form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{BinaryForm, QForm};
use crate::hexagram::{four_special_pascals, line_from_coords, Label, SextupleParams};
use crate::linalg::{self, Matrix};
use crate::projective::Line;
use crate::scalar::{int, ratio, Ring, Scalar};

fn tv<R: Ring>(g: &BinaryForm<R>, h: &BinaryForm<R>, r: usize) -> BinaryForm<R> {
    g.transvectant(h, r).expect("order within degree")
}

/// `psi(U, V, W) = 6 (U, VW)_2 - U (V, W)_2` for quadratics.
pub fn psi<R: Ring>(u: &BinaryForm<R>, v: &BinaryForm<R>, w: &BinaryForm<R>) -> BinaryForm<R> {
    let first = tv(u, &v.multiply(w), 2).scaled(&int(6));
    let second = u.multiply(&tv(v, w, 2));
    first.minus(&second).expect("both quadratic")
}

/// `3 [(U, V)_2 W + (U, W)_2 V - (V, W)_2 U]`, equal to [`psi`].
pub fn psi_symmetric<R: Ring>(
    u: &BinaryForm<R>,
    v: &BinaryForm<R>,
    w: &BinaryForm<R>,
) -> BinaryForm<R> {
    let a = w.multiply(&tv(u, v, 2));
    let b = v.multiply(&tv(u, w, 2));
    let c = u.multiply(&tv(v, w, 2));
    a.plus(&b).and_then(|s| s.minus(&c)).expect("all quadratic").scaled(&int(3))
}

/// The quartic `M` and quadratic `N` with
/// `(U, (V, a)_1 (W, a)_1)_1 = (M, a^2)_2 + (N, a^2)_1`.
pub fn stage2_m_n<R: Ring>(
    u: &BinaryForm<R>,
    v: &BinaryForm<R>,
    w: &BinaryForm<R>,
) -> (BinaryForm<R>, BinaryForm<R>) {
    stage2_m_n_with(u, v, w, &ratio(1, 2))
}

/// [`stage2_m_n`] with the weight of the `M` terms exposed, so the identity
/// check can be run against a deliberately wrong constant.
pub(crate) fn stage2_m_n_with<R: Ring>(
    u: &BinaryForm<R>,
    v: &BinaryForm<R>,
    w: &BinaryForm<R>,
    m_weight: &Scalar,
) -> (BinaryForm<R>, BinaryForm<R>) {
    let m = tv(u, w, 1)
        .multiply(v)
        .plus(&tv(u, v, 1).multiply(w))
        .expect("both quartic")
        .scaled(m_weight);
    let n = tv(u, &v.multiply(w), 2)
        .scaled(&ratio(-1, 2))
        .minus(&u.multiply(&tv(v, w, 2)).scaled(&ratio(1, 6)))
        .expect("both quadratic");
    (m, n)
}

/// The solve matrix `Z` built from `M = (m0..m4)` and `N = (n0..n2)`.
pub fn solve_matrix(m: &QForm, n: &QForm) -> Matrix {
    let m = m.coeffs();
    let n = n.coeffs();
    let two = int(2);
    vec![
        vec![&m[2] - &n[1], &n[0] - &two * &m[1], m[0].clone()],
        vec![&two * &m[3] - &n[2], int(-4) * &m[2], &two * &m[1] + &n[0]],
        vec![m[4].clone(), -(&two * &m[3]) - &n[2], &m[2] + &n[1]],
    ]
}

/// The three chords through the point pairs `{A, E}`, `{C, D}`, `{B, F}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChordTriple {
    pub ae: Line,
    pub cd: Line,
    pub bf: Line,
}

/// Stage-one output: the chords together with the Q-points
/// `mu1 = (l2, l3)_1`, `mu2 = (l3, l1)_1`, `mu3 = (l1, l2)_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StageOne {
    pub chords: ChordTriple,
    pub mu: [QForm; 3],
}

pub fn q_points(l1: &Line, l2: &Line, l3: &Line) -> Result<[QForm; 3]> {
    let mu = [
        tv(l2.form(), l3.form(), 1),
        tv(l3.form(), l1.form(), 1),
        tv(l1.form(), l2.form(), 1),
    ];
    if mu.iter().any(BinaryForm::is_zero) {
        return Err(Error::DegeneratePencil);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if mu[i].proportional(&mu[j])? {
                return Err(Error::DegeneratePencil);
            }
        }
    }
    Ok(mu)
}

pub fn stage1_chords(l1: &Line, l2: &Line, l3: &Line) -> Result<StageOne> {
    let mu = q_points(l1, l2, l3)?;
    let [m1, m2, m3] = &mu;
    let chord = |form: QForm, name: &'static str| -> Result<Line> {
        if form.is_zero() {
            return Err(Error::VanishingPhi(name));
        }
        Line::new(form)
    };
    let chords = ChordTriple {
        ae: chord(psi(m3, m1, m2), "AE")?,
        cd: chord(psi(m1, m2, m3), "CD")?,
        bf: chord(psi(m2, m3, m1), "BF")?,
    };
    Ok(StageOne { chords, mu })
}

/// How a parameter was extracted from its solve matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterDiagnostics {
    pub letter: char,
    /// Rows (1-based) whose 2x2 system produced the value.
    pub row_pair: (usize, usize),
    /// A second row pair that reproduced the same value, if any had a
    /// nonzero denominator.
    pub cross_check: Option<(usize, usize)>,
    pub rank: usize,
}

const ROW_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn minor(z: &Matrix, rows: (usize, usize), cols: (usize, usize)) -> Scalar {
    &z[rows.0][cols.0] * &z[rows.1][cols.1] - &z[rows.0][cols.1] * &z[rows.1][cols.0]
}

/// Solves `Z (1, x, x^2)^T = 0` for `x`, treating `x^2` as a second unknown
/// in each 2x2 row subsystem.
pub fn solve_from_matrix(letter: char, z: &Matrix) -> Result<(Scalar, LetterDiagnostics)> {
    let rank = linalg::rank(z);
    if rank < 2 {
        return Err(Error::RankDeficient { letter, rank });
    }
    if rank > 2 {
        return Err(Error::Inconsistent(letter));
    }
    let mut candidates = ROW_PAIRS.iter().filter_map(|&pair| {
        let den = minor(z, pair, (1, 2));
        if den.is_zero() {
            return None;
        }
        Some((pair, -minor(z, pair, (0, 2)) / den))
    });
    let (pair, x) = candidates.next().ok_or(Error::ZeroDenominator(letter))?;
    let cross_check = match candidates.next() {
        Some((other, y)) if y == x => Some(other),
        Some(_) => return Err(Error::Inconsistent(letter)),
        None => None,
    };
    let v = [Scalar::one(), x.clone(), &x * &x];
    if linalg::mat_vec(z, &v).iter().any(|r| !r.is_zero()) {
        return Err(Error::Inconsistent(letter));
    }
    let diag = LetterDiagnostics {
        letter,
        row_pair: (pair.0 + 1, pair.1 + 1),
        cross_check: cross_check.map(|(i, j)| (i + 1, j + 1)),
        rank,
    };
    Ok((x, diag))
}

/// One parameter from a chord `U` through its partner, a Q-point `V` on the
/// line from the unknown point to the chord's other endpoint, and the point
/// `W` where `l*` crosses the chord.
pub fn solve_parameter(
    letter: char,
    u: &QForm,
    v: &QForm,
    w: &QForm,
) -> Result<(Scalar, LetterDiagnostics)> {
    let (m, n) = stage2_m_n(u, v, w);
    solve_from_matrix(letter, &solve_matrix(&m, &n))
}

/// The other endpoint of a chord, given one endpoint's parameter.
pub fn chord_partner(chord: &Line, known: &Scalar, partner: char) -> Result<Scalar> {
    let lin = BinaryForm::linear(Scalar::one(), known.clone());
    let q = chord.form().divide_exact(&lin).map_err(|e| match e {
        Error::NotDivisible => Error::Inconsistent(partner),
        other => other,
    })?;
    let (p0, p1) = (q.coeff(0), q.coeff(1));
    if p0.is_zero() {
        return Err(Error::Inconsistent(partner));
    }
    Ok(p1 / p0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub letters: Vec<LetterDiagnostics>,
    pub stage_one: StageOne,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionResult {
    pub params: SextupleParams,
    pub diagnostics: Diagnostics,
}

/// Recovers `(a, ..., f)` from `l1, l2, l3, l*`.
pub fn reconstruct(l1: &Line, l2: &Line, l3: &Line, lstar: &Line) -> Result<ReconstructionResult> {
    let stage_one = stage1_chords(l1, l2, l3)?;
    let ch = &stage_one.chords;
    let [mu1, mu2, mu3] = &stage_one.mu;
    let cross = |chord: &Line| -> Result<QForm> {
        let t = tv(lstar.form(), chord.form(), 1);
        if t.is_zero() {
            return Err(Error::DegeneratePencil);
        }
        Ok(t)
    };

    let (a, da) = solve_parameter('a', ch.cd.form(), mu2, &cross(&ch.bf)?)?;
    let (b, db) = solve_parameter('b', ch.ae.form(), mu1, &cross(&ch.cd)?)?;
    let (c, dc) = solve_parameter('c', ch.bf.form(), mu3, &cross(&ch.ae)?)?;
    let e = chord_partner(&ch.ae, &a, 'e')?;
    let d = chord_partner(&ch.cd, &c, 'd')?;
    let f = chord_partner(&ch.bf, &b, 'f')?;

    let params = SextupleParams::new([a, b, c, d, e, f]).map_err(|_| Error::RoundTripFailed)?;
    let forward = four_special_pascals(&params).map_err(|_| Error::RoundTripFailed)?;
    let inputs = [l1, l2, l3, lstar];
    if !forward.lines().iter().zip(inputs).all(|(x, y)| x.same_as(y)) {
        return Err(Error::RoundTripFailed);
    }
    Ok(ReconstructionResult {
        params,
        diagnostics: Diagnostics { letters: vec![da, db, dc], stage_one },
    })
}

/// [`reconstruct`] from the `(s, t)` coordinates of `l1, l2, l3, l*`.
pub fn reconstruct_from_coords(coords: &[(Scalar, Scalar); 4]) -> Result<ReconstructionResult> {
    let [l1, l2, l3, ls] = coords.clone().map(|(s, t)| line_from_coords(&s, &t));
    reconstruct(&l1, &l2, &l3, &ls)
}

impl ReconstructionResult {
    pub fn get(&self, label: Label) -> &Scalar {
        self.params.get(label)
    }
}
