//! Derived geometric quantities of the catalog: Heron's area and the
//! elliptic-coordinate pair l₁, l₂.

/// Area of the triangle with sides a, b, c (zero when degenerate or impossible).
pub fn heron_area(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    // Kahan's ordering keeps the factors accurate for needle-like triangles
    let p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if p <= 0.0 {
        0.0
    } else {
        0.25 * p.sqrt()
    }
}

/// (l₁, l₂, l₂² − l₁²) for the triple (a, b, c).
pub fn l_pair(a: f64, b: f64, c: f64) -> (f64, f64, f64) {
    let rp = ((b + c) * (b + c) + a * a).sqrt();
    let rm = ((b - c) * (b - c) + a * a).sqrt();
    let l2 = 0.5 * (rp + rm);
    // l₁ = ½(rp − rm) without the cancellation
    let l1 = 2.0 * b * c / (rp + rm);
    (l1, l2, rp * rm)
}
