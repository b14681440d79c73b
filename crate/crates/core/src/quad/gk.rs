//! Gauss–Kronrod 21-point rule and a globally adaptive integrator built on it.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{QuadError, QuadResult};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// One application of the 21-point Kronrod rule on [a, b]: (value, error, ∫|f|).
pub(crate) fn qk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64, f64), QuadError> {
    let centr = 0.5 * (a + b);
    let hlgth = 0.5 * (b - a);
    let dhlgth = hlgth.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    let eval = |x: f64| -> Result<f64, QuadError> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadError::NonFinite { at: x })
        }
    };
    let fc = eval(centr)?;
    let mut resg = 0.0;
    let mut resk = WGK[10] * fc;
    let mut resabs = resk.abs();
    for j in 0..5 {
        let jtw = 2 * j + 1;
        let absc = hlgth * XGK[jtw];
        let f1 = eval(centr - absc)?;
        let f2 = eval(centr + absc)?;
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += WG[j] * (f1 + f2);
        resk += WGK[jtw] * (f1 + f2);
        resabs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let jtwm1 = 2 * j;
        let absc = hlgth * XGK[jtwm1];
        let f1 = eval(centr - absc)?;
        let f2 = eval(centr + absc)?;
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += WGK[jtwm1] * (f1 + f2);
        resabs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }
    let reskh = resk * 0.5;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }
    let result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    let mut abserr = ((resk - resg) * hlgth).abs();
    if resasc != 0.0 && abserr != 0.0 {
        abserr = resasc * (200.0 * abserr / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        abserr = abserr.max(ROUNDING_FLOOR * resabs);
    }
    Ok((result, abserr, resabs))
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    /// ∫|f| over the piece
    mass: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// qk21 never reports less than this multiple of ∫|f|; a piece sitting on
/// that floor cannot improve by splitting.
const ROUNDING_FLOOR: f64 = 50.0 * f64::EPSILON;

/// Bisect the piece with the largest error until the summed error meets
/// `abs_tol` or `rel_tol·(1+|I|)`, or the evaluation budget runs out.
/// `breaks` must be increasing and holds at least the two endpoints.
pub(crate) fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<QuadResult, QuadError> {
    let mut heap = BinaryHeap::new();
    let mut evals = 0;
    let mut total = 0.0;
    for w in breaks.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let (v, e, m) = qk21(f, w[0], w[1])?;
        evals += 21;
        total += v;
        heap.push(Piece { a: w[0], b: w[1], value: v, err: e, mass: m });
    }
    let mut total_err: f64 = heap.iter().map(|q| q.err).sum();
    // pieces too narrow to split keep their error here
    let mut frozen = Vec::new();
    let target = |t: f64| abs_tol.max(rel_tol * (1.0 + t.abs()));
    while total_err > target(total) {
        if evals + 42 > max_evals {
            let partial = QuadResult { value: total, abs_err: total_err, evaluations: evals, converged: false };
            return Err(QuadError::NoConvergence { partial });
        }
        let Some(p) = heap.pop() else { break };
        let mid = 0.5 * (p.a + p.b);
        // too narrow to split, or already at the rounding floor of its value
        if !(mid > p.a && mid < p.b) || p.b - p.a < 1e-14 * p.a.abs().max(p.b.abs()) || p.err <= ROUNDING_FLOOR * p.mass
        {
            frozen.push(p);
            continue;
        }
        let (v1, e1, m1) = qk21(f, p.a, mid)?;
        let (v2, e2, m2) = qk21(f, mid, p.b)?;
        evals += 42;
        total += v1 + v2 - p.value;
        heap.push(Piece { a: p.a, b: mid, value: v1, err: e1, mass: m1 });
        heap.push(Piece { a: mid, b: p.b, value: v2, err: e2, mass: m2 });
        total_err = heap.iter().chain(frozen.iter()).map(|q| q.err).sum::<f64>();
    }
    // re-sum to shed the drift of the running total
    let value: f64 = heap.iter().chain(frozen.iter()).map(|q| q.value).sum();
    let converged = total_err <= target(value);
    Ok(QuadResult { value, abs_err: total_err, evaluations: evals, converged })
}
