use std::collections::BTreeMap;

use quintic::cohomology::WeightSpec;
use quintic::exact::{int, PolyH};
use quintic::hypergeom::{i_series_equivariant, LocalizedSeries};
use quintic::recursion::{
    anchors_of, extract_recursion, reconstruct, solve_unique, validate_weights, verify_polynomiality,
    RecursionCoefficients, RecursionData,
};

const PERM: [usize; 5] = [3, 0, 4, 2, 1];

#[test]
fn extraction_and_reconstruction_are_inverse() {
    let w = WeightSpec::default();
    let cert = validate_weights(&w, 4).unwrap();
    let data = extract_recursion(&i_series_equivariant(4, &w), &cert, 4).unwrap();
    let rebuilt = reconstruct(&data, 4).unwrap();
    assert_eq!(extract_recursion(&rebuilt, &cert, 4).unwrap(), data);

    // Truncating the data commutes with reconstruction.
    let mut low = data.clone();
    low.c.retain(|(_, _, m), _| *m <= 2);
    low.r.retain(|(_, d), _| *d <= 2);
    low.d_max = 2;
    assert_eq!(reconstruct(&low, 2).unwrap(), rebuilt.truncate(2));
}

#[test]
fn arbitrary_data_round_trips() {
    let w = WeightSpec::default();
    let cert = validate_weights(&w, 3).unwrap();
    let mut c = RecursionCoefficients::new();
    let mut r = BTreeMap::new();
    for a in 0..5 {
        r.insert((a, 0), PolyH::constant(int(1)));
        for d in 1..=3 {
            r.insert((a, d), PolyH::new((0..=d).map(|j| int((a + 2 * d + j) as i64 % 5 - 2)).collect()));
            for b in (0..5).filter(|&b| b != a) {
                c.insert((a, b, d), int((3 * a + b + d) as i64 % 7 - 3));
            }
        }
    }
    let data = RecursionData { c, r, w, d_max: 3 };
    let z = reconstruct(&data, 3).unwrap();
    assert_eq!(extract_recursion(&z, &cert, 3).unwrap(), data);
}

#[test]
fn trivial_uniqueness() {
    let w = WeightSpec::default();
    let anchors = anchors_of(&LocalizedSeries::one(2), 2);
    let sol = solve_unique(&RecursionCoefficients::new(), &anchors, &w, 2, 4).unwrap();
    assert_eq!(sol.series, LocalizedSeries::one(2));
}

fn permute(z: &LocalizedSeries) -> LocalizedSeries {
    LocalizedSeries { components: std::array::from_fn(|a| z.components[PERM[a]].clone()) }
}

#[test]
fn relabeling_equivariance() {
    let w = WeightSpec::default();
    let wp = w.permuted(PERM).unwrap();
    let z = i_series_equivariant(3, &w);
    let zp = i_series_equivariant(3, &wp);
    assert_eq!(zp, permute(&z));

    let data = extract_recursion(&z, &validate_weights(&w, 3).unwrap(), 3).unwrap();
    let datap = extract_recursion(&zp, &validate_weights(&wp, 3).unwrap(), 3).unwrap();
    for ((a, b, m), c) in &datap.c {
        assert_eq!(c, &data.c[&(PERM[*a], PERM[*b], *m)]);
    }
    for ((a, d), r) in &datap.r {
        assert_eq!(r, &data.r[&(PERM[*a], *d)]);
    }

    let report = verify_polynomiality(&z, &w, 2, 3);
    let reportp = verify_polynomiality(&zp, &wp, 2, 3);
    assert_eq!(report, reportp);

    let sol = solve_unique(&datap.c, &anchors_of(&zp, 2), &wp, 2, 4).unwrap();
    assert_eq!(sol.series, zp.truncate(2));
}
