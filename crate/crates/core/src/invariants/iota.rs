use super::dixmier_ohno::DixmierOhnoVector;
use crate::rational::{int, pow, rat, smooth, Rational};

pub const IOTA_WEIGHTS: [u32; 6] = [6, 9, 12, 15, 18, 21];
pub const IOTA_LABELS: [&str; 6] = ["iota6", "iota9", "iota12", "iota15", "iota18", "iota21"];

/// The invariants `ι6, …, ι21` and `ι42` that detect the locus of conic squares
/// and its normal directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IotaVector {
    pub values: [Rational; 6],
    pub iota42: Rational,
}

impl IotaVector {
    pub const WEIGHTS: [u32; 6] = IOTA_WEIGHTS;
    pub const WEIGHT42: u32 = 42;
}

/// `3^10/(2^18·5^5) · I3^5 · I27`.
pub fn iota42(d: &DixmierOhnoVector) -> Rational {
    smooth(-18, 10, -5, 0) * pow(d.i3(), 5) * d.i27()
}

pub fn iota(d: &DixmierOhnoVector) -> IotaVector {
    let i3 = d.i3();
    let (i6, i9, j9, i12, j12, i15, j15) = (d.i6(), d.i9(), d.j9(), d.i12(), d.j12(), d.i15(), d.j15());
    let p = |r: &Rational, e: u32| pow(r, e);

    let t6 = smooth(-5, 2, -1, -1) * (p(i3, 2) - int(180) * i6);

    let t9 = smooth(-9, 5, -2, -3) * (int(14) * p(i3, 3) - int(2520) * i3 * i6 - int(81) * i9 + int(135) * j9);

    let t12 =
        smooth(-14, 3, -1, -3) * i3 * (int(-32) * p(i3, 3) + int(14580) * i3 * i6 + int(261) * i9 - int(495) * j9)
            + rat(25, 2 * 3 * 49) * p(&t6, 2);

    let t15 = smooth(-16, 4, -2, -5)
        * i3
        * (int(-592) * p(i3, 4) + int(30780) * p(i3, 2) * i6 + int(2601) * i3 * i9 - int(45) * i3 * j9
            + int(7290000) * p(i6, 2)
            - int(2430) * j12)
        + rat(25, 9 * 7) * &t6 * &t9;

    let t18 = smooth(-24, 8, -2, -4)
        * p(i3, 2)
        * (int(-8) * p(i3, 4) - int(14418) * p(i3, 2) * i6 - int(117) * i3 * i9
            + int(423) * i3 * j9
            + int(155520) * p(i6, 2)
            - int(486) * i12)
        + rat(17 * 17 * 17, 64 * 9 * 343) * p(&t6, 3)
        + rat(15, 32) * p(&t9, 2)
        - rat(17, 8 * 7) * &t6 * &t12;

    let t21 = smooth(-25, 7, -3, -5)
        * p(i3, 2)
        * (int(-128) * p(i3, 5) + int(213912) * p(i3, 3) * i6 + int(2961) * p(i3, 2) * i9
            - int(8541) * p(i3, 2) * j9
            - int(18057600) * i3 * p(i6, 2)
            + int(12204) * i3 * i12
            + int(810) * i3 * j12
            - int(45360) * i6 * i9
            + int(285120) * i6 * j9
            - int(4860) * i15
            - int(540) * j15)
        + rat(250, 27 * 49) * p(&t6, 2) * &t9
        - rat(13, 18) * &t9 * &t12
        - rat(17, 4 * 3 * 7) * &t6 * &t15;

    IotaVector { values: [t6, t9, t12, t15, t18, t21], iota42: iota42(d) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::q0;
    use crate::invariants::conic_square_invariants;
    use num_traits::Zero;

    #[test]
    fn conic_squares_kill_every_iota() {
        let v = iota(&conic_square_invariants(&q0()));
        assert!(v.values.iter().all(Zero::is_zero));
        assert!(v.iota42.is_zero());
    }
}
