//! Values frozen from computations that share no code with this crate: the
//! classical closed-form Yukawa coupling `5/((1-5⁵q) f₀² (q dt/dq)³)` in plain
//! fractions, and sigma-model coefficients as minus the residue at infinity.

use num_bigint::BigInt;
use quintic::cohomology::WeightSpec;
use quintic::exact::{int, parse_rational, rat, PolyH, RatFuncH, Ring};
use quintic::hypergeom::i_series_equivariant;
use quintic::instanton::instanton_numbers;
use quintic::mirror::{apply_mirror, build_mirror_map, yukawa};
use quintic::recursion::{extract_recursion, validate_weights};
use quintic::sigma_model::l_series_dh;

const INSTANTONS: [(&str, &str); 10] = [
    ("2875/1", "2875"),
    ("4876875/8", "609250"),
    ("8564575000/27", "317206375"),
    ("15517926796875/64", "242467530000"),
    ("229305888887648/1", "229305888887625"),
    ("248249742157695375/1", "248249742118022000"),
    ("101216230345800061125625/343", "295091050570845659250"),
    ("192323666400003538944396875/512", "375632160937476603550000"),
    ("367299732093982242625847031250/729", "503840510416985243645106250"),
    ("704288164978454714776724365580/1", "704288164978454686113488249750"),
];

#[test]
fn instanton_table_through_degree_ten() {
    let table = instanton_numbers(10).unwrap();
    assert_eq!(table.rows.len(), 10);
    for (row, (gw, n)) in table.rows.iter().zip(INSTANTONS) {
        assert_eq!(row.gw, parse_rational(gw).unwrap(), "N_{}", row.d);
        assert_eq!(row.n, n.parse::<BigInt>().unwrap(), "n_{}", row.d);
    }
}

#[test]
fn yukawa_coefficients() {
    let j = apply_mirror(&quintic::hypergeom::i_series(4), &build_mirror_map(4)).unwrap();
    let k = yukawa(&j, 4).unwrap();
    let expected = [5i64, 2875, 4876875, 8564575000, 15517926796875];
    for (d, e) in expected.iter().enumerate() {
        assert_eq!(k.q_coeff(d), int(*e));
    }
}

#[test]
fn sigma_model_coefficients() {
    let l = l_series_dh(2, 4).unwrap();
    let h = |c: i64, d: i64, k: usize| RatFuncH::from_poly(PolyH::monomial(rat(c, d), k));
    for d in 0..=2 {
        for b in 0..=2 {
            assert_eq!(l.coeff(d, b), RatFuncH::zero(), "q^{d} z^{b}");
        }
    }
    assert_eq!(l.coeff(0, 3), h(5, 6, 0));
    assert_eq!(l.coeff(0, 4), RatFuncH::zero());
    assert_eq!(l.coeff(1, 3), h(15625, 6, 0));
    assert_eq!(l.coeff(1, 4), h(15625, 12, 1));
    assert_eq!(l.coeff(2, 3), h(48828125, 6, 0));
    assert_eq!(l.coeff(2, 4), h(48828125, 6, 1));
}

#[test]
fn first_recursion_coefficient_at_small_weights() {
    let w = WeightSpec::from_ints([1, 2, 3, -1, -5]).unwrap();
    let cert = validate_weights(&w, 1).unwrap();
    let data = extract_recursion(&i_series_equivariant(1, &w), &cert, 1).unwrap();
    assert_eq!(data.c[&(0, 1, 1)], int(-1440));
}
