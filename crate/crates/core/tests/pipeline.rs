//! Forward synthesis and reconstruction checked against each other and
//! against independent constructions.

use hexagram::forms::QForm;
use hexagram::hexagram::{
    array, four_special_pascals, kirkman_concurrent, pascal_line, pascal_line_of,
    steiner_concurrent, PascalArray,
};
use hexagram::reconstruct::{q_points, reconstruct, reconstruct_from_coords, stage1_chords};
use hexagram::sample::random_generic_sextuple;
use hexagram::scalar::{int, ratio};
use hexagram::{Label, SextupleParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `u_x v_x` for conic points with parameters `u, v`, built from scratch:
/// the chord through `(1, u, u^2)` and `(1, v, v^2)`.
fn chord_oracle(p: &SextupleParams, x: Label, y: Label) -> QForm {
    let (u, v) = (p.get(x), p.get(y));
    QForm::cayley(vec![int(1), (u + v) * ratio(1, 2), u * v]).unwrap()
}

fn samples(seed: u64, n: usize) -> Vec<SextupleParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_generic_sextuple(&mut rng).0).collect()
}

#[test]
fn fixed_point_with_fractions_and_zero() {
    let p = SextupleParams::new([ratio(1, 2), int(3), ratio(-5, 7), int(0), int(11), int(-2)]).unwrap();
    let four = four_special_pascals(&p).unwrap();
    let back = reconstruct_from_coords(&four.coords()).unwrap();
    assert_eq!(back.params, p);
    assert_eq!(four_special_pascals(&back.params).unwrap(), four);
}

#[test]
fn every_arrangement_gives_the_same_line() {
    let mut params = samples(11, 2);
    params.push(SextupleParams::from_ints([7, -3, 2, 5, -4, 1]).unwrap());
    for p in &params {
        for arr in PascalArray::all() {
            let line = pascal_line(p, &arr).unwrap().line;
            for (top, bottom) in arr.arrangements() {
                let other = pascal_line_of(p, top, bottom).unwrap();
                assert!(line.same_as(&other), "{arr} vs {top:?}/{bottom:?}");
            }
        }
    }
}

#[test]
fn stage_one_matches_chord_oracle() {
    use Label::*;
    for p in samples(12, 100) {
        let four = four_special_pascals(&p).unwrap();
        let s1 = stage1_chords(&four.l1.line, &four.l2.line, &four.l3.line).unwrap();
        let ch = &s1.chords;
        assert!(ch.ae.form().proportional(&chord_oracle(&p, A, E)).unwrap());
        assert!(ch.cd.form().proportional(&chord_oracle(&p, C, D)).unwrap());
        assert!(ch.bf.form().proportional(&chord_oracle(&p, B, F)).unwrap());
    }
}

#[test]
fn q_points_match_chord_crossings() {
    use Label::*;
    for p in samples(15, 50) {
        let four = four_special_pascals(&p).unwrap();
        let mu = q_points(&four.l1.line, &four.l2.line, &four.l3.line).unwrap();
        // Crossing of two chords, computed directly from their coefficients.
        let cross = |g: QForm, h: QForm| -> QForm {
            let (g, h) = (g.coeffs().to_vec(), h.coeffs().to_vec());
            let c0 = &g[0] * &h[1] - &g[1] * &h[0];
            let c1 = (&g[0] * &h[2] - &g[2] * &h[0]) * ratio(1, 2);
            let c2 = &g[1] * &h[2] - &g[2] * &h[1];
            QForm::cayley(vec![c0, c1, c2]).unwrap()
        };
        let want = [
            cross(chord_oracle(&p, A, B), chord_oracle(&p, E, F)),
            cross(chord_oracle(&p, A, C), chord_oracle(&p, D, E)),
            cross(chord_oracle(&p, B, C), chord_oracle(&p, D, F)),
        ];
        for (m, w) in mu.iter().zip(&want) {
            assert!(m.proportional(w).unwrap());
        }
    }
}

#[test]
fn reconstruction_certificates() {
    for p in samples(13, 30) {
        let four = four_special_pascals(&p).unwrap();
        let r = reconstruct(&four.l1.line, &four.l2.line, &four.l3.line, &four.lstar.line).unwrap();
        assert_eq!(r.params, p);
        let letters: Vec<char> = r.diagnostics.letters.iter().map(|d| d.letter).collect();
        assert_eq!(letters, ['a', 'b', 'c']);
        assert!(r.diagnostics.letters.iter().all(|d| d.rank == 2));
    }
}

#[test]
fn reconstruction_is_invariant_to_line_scaling() {
    let p = SextupleParams::from_ints([7, -3, 2, 5, -4, 1]).unwrap();
    let four = four_special_pascals(&p).unwrap();
    let scaled = |l: &hexagram::Line, k: i64| hexagram::Line::new(l.form().scaled(&int(k))).unwrap();
    let r = reconstruct(
        &scaled(&four.l1.line, -3),
        &scaled(&four.l2.line, 5),
        &scaled(&four.l3.line, 7),
        &scaled(&four.lstar.line, -11),
    )
    .unwrap();
    assert_eq!(r.params, p);
}

#[test]
fn labels_are_recovered_not_just_the_set() {
    use Label::*;
    let p = SextupleParams::from_ints([7, -3, 2, 5, -4, 1]).unwrap();
    // (a e) alone does not preserve the special Pascals, so the answer must
    // move with the labels.
    let q = p.swapped(&[(A, E)]);
    let back = reconstruct_from_coords(&four_special_pascals(&q).unwrap().coords()).unwrap();
    assert_eq!(back.params, q);
    assert_ne!(back.params, p);
}

#[test]
fn steiner_and_kirkman_on_samples() {
    for p in samples(14, 10) {
        assert!(steiner_concurrent(&p).unwrap());
        assert!(kirkman_concurrent(&p).unwrap());
    }
}

#[test]
fn a_non_steiner_triple_is_not_concurrent() {
    let p = SextupleParams::from_ints([7, -3, 2, 5, -4, 1]).unwrap();
    let triple = [array("ABC|FED"), array("ABC|DFE"), array("ADB|ECF")];
    let d = hexagram::hexagram::concurrency_determinant(&p, &triple).unwrap();
    assert_ne!(d, int(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, _) = random_generic_sextuple(&mut rng);
        let four = four_special_pascals(&p).unwrap();
        let back = reconstruct_from_coords(&four.coords()).unwrap();
        prop_assert_eq!(back.params, p);
    }
}
