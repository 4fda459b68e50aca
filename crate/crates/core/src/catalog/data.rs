//! Catalog rows. Matrices use the shared text format, with `a` for the
//! canonical generator of GF(4), GF(8) and GF(16).

use super::{CatalogEntry as Row, Evenness, Source};

const fn row(id: &'static str, table: u8, source: Source, g: u64, coldist: Option<usize>) -> Row {
    Row {
        id,
        table,
        name: None,
        source,
        expected_g: g,
        expected_coldist_index: coldist,
        mds_star: false,
        mds_bullet: false,
        strongly_mds: false,
        evenness: Evenness::Unmarked,
        cyclic: false,
        sigma: None,
        generator_from_row_sum: false,
    }
}

impl Row {
    const fn named(mut self, name: &'static str) -> Row {
        self.name = Some(name);
        self
    }
    const fn even(mut self, e: Evenness) -> Row {
        self.evenness = e;
        self
    }
    const fn mds(mut self, star: bool, bullet: bool, strong: bool) -> Row {
        self.mds_star = star;
        self.mds_bullet = bullet;
        self.strongly_mds = strong;
        self
    }
    const fn cyclic(mut self, sigma: &'static str) -> Row {
        self.cyclic = true;
        self.sigma = Some(sigma);
        self
    }
    const fn row_sum(mut self) -> Row {
        self.generator_from_row_sum = true;
        self
    }
}

use Evenness::*;
use Source::{Puncture, Rows, TransposedRows};

const SIGMA_7_2: &str = "x^5";
const SIGMA_15_1: &str = "x+x^7+x^10";
const SIGMA_15_23: &str = "x^3+x^5+x^7+x^10+x^12+x^13+x^14";
const SIGMA_3_4: &str = "a^2*x";
const SIGMA_5_4: &str = "x^2";
const SIGMA_3_16: &str = "a^10*x";
const SIGMA_5_16: &str = "x^3";
const SIGMA_7_8: &str = "x^5";
const SIGMA_7_8_B: &str = "a*x+a*x^2+a^3*x^3+a^3*x^4+a^3*x^5+a^2*x^6";

#[rustfmt::skip]
pub(super) static ROWS: &[Row] = &[
    // ---- group 1: codes meeting the Griesmer bound, binary and small fields
    row("(5,3,4;2)_2", 1, Rows(2, "
        1+z^2, 1+z, z, 1+z^2, z+z^2
        1+z, z, 1+z, 1, z
        z, 1, 1+z, 1+z, 1"), 6, Some(7))
        .even(NotEven),
    row("(5,2,6;3)_2", 1, Rows(2, "
        z^3+z^2+1, z^2+z, z^3+z+1, z^2+z, z^3+1
        z+1, z^3+z^2+1, z^3+z^2, z^3+z+1, z^2+z"), 12, Some(10))
        .even(Even),
    row("(5,2,6;4)_2", 1, Rows(2, "
        1+z^3+z^4, 1+z+z^4, 1+z^3, 1+z^2+z^3, z+z^3+z^4
        1+z^2, 1+z, z^2+z, z^2+z+1, z^2+z+1"), 12, Some(10))
        .even(Even),
    row("(9,3,1;1)_8", 1, Rows(8, "
        z+1, z+a, z, z+a^2, z+a^3, z+a^6, z+1, z, z+a
        1, a^2, a^5, a^6, a^6, a^5, a^2, 1, 0
        0, 1, a^2, a^5, a^6, a^6, a^5, a^2, 1"), 8, Some(1))
        .mds(true, true, false),
    row("(3,2,2;1)_5", 1, Rows(5, "
        2+3*z, 3*z, 4+4*z
        4+2*z, 1+3*z, 2*z"), 5, Some(5))
        .mds(true, true, false),
    row("(7,3,3;1)_2", 1, Rows(2, "
        1, z, 1+z, 1+z, 1, z, 0
        z, 1+z, 0, 1+z, 1, 1, z
        0, z, 1, 0, 1+z, 1+z, 1+z"), 8, Some(2))
        .named("G1").even(Even).cyclic(SIGMA_7_2),
    row("(7,3,6;2)_2", 1, Rows(2, "
        1+z^2, z+z^2, 1+z, 1+z, 1+z^2, z, z^2
        z, 1+z+z^2, 0, 1+z+z^2, 1+z^2, 1+z^2, z
        z^2, z+z^2, 1+z^2, 0, 1+z, 1+z+z^2, 1+z"), 12, Some(5))
        .named("G2").even(Even).cyclic(SIGMA_7_2),
    row("(7,3,9;3)_2", 1, Rows(2, "
        1+z^2+z^3, z+z^2, 1+z+z^3, 1+z, 1+z^2, z+z^3, z^2+z^3
        z, 1+z+z^2+z^3, 0, 1+z+z^2, 1+z^2+z^3, 1+z^2+z^3, z+z^3
        z^2+z^3, z+z^2, 1+z^2, z^3, 1+z+z^3, 1+z+z^2+z^3, 1+z"), 16, Some(9))
        .even(EvenQuestion).cyclic(SIGMA_7_2),
    row("(7,3,12;4)_2", 1, Rows(2, "
        1+z+z^3+z^4, 1+z^3+z^4, 1+z^2, z+z^2+z^4, 1+z^2+z^3, z, z+z^2+z^3+z^4
        z^2+z^3, 1+z+z^2+z^4, 1+z^4, 1+z+z^2+z^3+z^4, z, 1+z+z^3+z^4, z^2+z^3
        z^2+z^4, z, 1+z+z^3, 1+z+z^2+z^4, 1+z^2+z^3+z^4, z^2+z^3+z^4, 1+z+z^3"), 20, Some(14))
        .even(DoublyEvenQuestion).cyclic(SIGMA_7_2),
    row("(15,4,4;1)_2", 1, Rows(2, "
        z, 0, z, 1+z, 0, 0, 1+z, 1, 0, 1, z, 1+z, 1+z, 1+z, 1
        1, 0, z, 0, 1, 0, z, 1+z, 1+z, z, 1, z, 1, 1+z, 1+z
        1, 1, z, z, z, 1+z, 0, z, 1, 1+z, z, 1, 0, 1+z, 1
        1+z, 1+z, 1, z, 0, z, 1+z, 0, 0, 1+z, 1, 0, 1, z, 1+z"), 16, Some(2))
        .named("Ĝ1").even(Even).cyclic(SIGMA_15_1),
    row("(15,4,8;2)_2", 1, Rows(2, "
        1+z^2, 1+z+z^2, 1+z, z, z, z^2, 1+z, 0, z+z^2, 1+z+z^2, 1, z^2, 1+z, z^2, 1+z^2
        1+z, 1+z+z^2, 1+z+z^2, 1+z, z^2, z, z^2, 1+z+z^2, z+z^2, z^2, 1, 1+z, 0, 1+z^2, 0
        z+z^2, 1+z+z^2, 1+z+z^2, 1, 1+z, 0, z+z^2, z, 1, z^2, z+z^2, 1, 1+z^2, 0, 1+z+z^2
        1+z, z, 1+z^2, 1+z+z^2, 1, 1+z+z^2, z, z^2, z^2, 1+z+z^2, z^2, 0, 1, 1+z, z+z^2"), 24, Some(5))
        .named("Ĝ2").even(EvenQuestion).cyclic(SIGMA_15_23),
    // displayed as the 15x4 transpose
    row("(15,4,12;3)_2", 1, TransposedRows(2, "
        1+z^2, 1+z+z^3, z+z^2, 1+z+z^3
        1+z+z^2, 1+z+z^2+z^3, 1+z+z^2+z^3, z
        1+z+z^3, 1+z+z^2, 1+z+z^2, 1+z^2+z^3
        z, 1+z+z^3, 1, 1+z+z^2
        z, z^2, 1+z, 1+z^3
        z^2, z+z^3, z^3, 1+z+z^2+z^3
        1+z+z^3, z^2+z^3, z+z^2+z^3, z
        z^3, 1+z+z^2, z+z^3, z^2
        z+z^2+z^3, z+z^2, 1+z^3, z^2+z^3
        1+z+z^2+z^3, z^2+z^3, z^2, 1+z+z^2
        1, 1, z+z^2+z^3, z^2
        z^2+z^3, 1+z, 1, 0
        1+z, 0, 1+z^2+z^3, 1+z^3
        z^2+z^3, 1+z^2+z^3, z^3, 1+z+z^3
        1+z^2+z^3, z^3, 1+z+z^2, z+z^2+z^3"), 32, None)
        .named("Ĝ3").even(EvenQuestion).cyclic(SIGMA_15_23),
    // ---- group 2: skew-cyclic codes over GF(4), GF(8), GF(16)
    row("(3,1,1;1)_4", 2, Rows(4, "a+a*z, a^2+a*z, 1+a*z"), 6, Some(2))
        .mds(true, false, true).cyclic(SIGMA_3_4),
    row("(3,1,2;2)_4", 2, Rows(4, "a+a*z+z^2, a^2+a*z+a^2*z^2, 1+a*z+a*z^2"), 9, Some(5))
        .mds(true, false, false).cyclic(SIGMA_3_4),
    row("(3,1,3;3)_4", 2, Rows(4, "
        a+a*z+z^2+a^2*z^3, a^2+a*z+a^2*z^2+z^3, 1+a*z+a*z^2+a*z^3"), 12, Some(7))
        .mds(true, true, false).cyclic(SIGMA_3_4),
    row("(3,1,4;4)_4", 2, Rows(4, "
        a+a*z+z^2+a^2*z^3+a*z^4, a^2+a*z+a^2*z^2+z^3+a*z^4, 1+a*z+a*z^2+a*z^3+a*z^4"), 14, Some(10))
        .cyclic(SIGMA_3_4),
    row("(3,1,5;5)_4", 2, Rows(4, "
        a+a*z+z^2+a^2*z^3+a*z^4+a*z^5, a^2+a*z+a^2*z^2+z^3+a*z^4+z^5, 1+a*z+a*z^2+a*z^3+a*z^4+a^2*z^5"), 16, Some(11))
        .cyclic(SIGMA_3_4),
    row("(5,2,2;1)_4", 2, Rows(4, "
        0, a+z, a^2+a^2*z, a^2+a^2*z, a+z
        a+a^2*z, z, a, a^2+z, a^2+a^2*z"), 8, Some(2))
        .cyclic(SIGMA_5_4),
    row("(5,2,4;2)_4", 2, Rows(4, "
        0, a+z+a*z^2, a^2+a^2*z+a^2*z^2, a^2+a^2*z+a^2*z^2, a+z+a*z^2
        a+a^2*z+a*z^2, z+a^2*z^2, a+a^2*z^2, a^2+z+a*z^2, a^2+a^2*z"), 12, Some(5))
        .cyclic(SIGMA_5_4),
    row("(5,2,6;3)_4", 2, Rows(4, "
        0, a^2+a^2*z+a*z^2+z^3, 1+a*z+a^2*z^2+a^2*z^3, 1+a*z+a^2*z^2+a^2*z^3, a^2+a^2*z+a*z^2+z^3
        a^2+a*z+a*z^2+a^2*z^3, a^2*z+a^2*z^2+a^2*z^3, a^2+a^2*z^2+z^3, 1+a^2*z+a*z^2, 1+a*z+z^3"), 16, Some(9))
        .cyclic(SIGMA_5_4),
    row("(3,2,2;1)_16", 2, Rows(16, "
        a^5+a^4*z, a^3+a^8*z, a^9+a^2*z
        a^9+a^12*z, a^5+a^14*z, a^3+a^3*z"), 5, Some(3))
        .mds(true, false, true).cyclic(SIGMA_3_16),
    row("(3,2,3;2)_16", 2, Rows(16, "
        a+a*z+z^2, a^6+a*z+a^10*z^2, a^11+a*z+a^5*z^2
        1+z, a^10+a^5*z, a^5+a^10*z"), 6, Some(5))
        .mds(true, false, false).cyclic(SIGMA_3_16).row_sum(),
    row("(5,1,1;1)_16", 2, Rows(16, "a+a*z, a^13+a^10*z, a^10+a^4*z, a^7+a^13*z, a^4+a^7*z"), 10, Some(2))
        .mds(true, false, true).cyclic(SIGMA_5_16),
    row("(5,1,2;2)_16", 2, Rows(16, "
        a+a^4*z+a*z^2, a^7+a*z+a^10*z^2, a^13+a^13*z+a^4*z^2, a^4+a^10*z+a^13*z^2, a^10+a^7*z+a^7*z^2"), 15, Some(3))
        .mds(true, false, true).cyclic(SIGMA_5_16),
    row("(5,1,3;3)_16", 2, Rows(16, "
        a+z+a^2*z^2+z^3, a^7+a^12*z+a^11*z^2+a^3*z^3, a^13+a^9*z+a^5*z^2+a^6*z^3, a^4+a^6*z+a^14*z^2+a^9*z^3, a^10+a^3*z+a^8*z^2+a^12*z^3"), 20, Some(5))
        .mds(true, false, false).cyclic(SIGMA_5_16),
    row("(5,2,2;1)_16", 2, Rows(16, "
        a+a*z, a^13+a^10*z, a^10+a^4*z, a^7+a^13*z, a^4+a^7*z
        1+a^5*z, a^3+a^11*z, a^6+a^2*z, a^9+a^8*z, a^12+a^14*z"), 9, Some(2))
        .mds(true, false, true).cyclic(SIGMA_5_16).row_sum(),
    row("(7,1,1;1)_8", 2, Rows(8, "a+a*z, a^3+z, a^5+a^6*z, 1+a^5*z, a^2+a^4*z, a^4+a^3*z, a^6+a^2*z"), 14, Some(2))
        .mds(true, false, true).cyclic(SIGMA_7_8),
    row("(7,1,2;2)_8", 2, Rows(8, "
        a^2+a*z+z^2, a^5+a^3*z+a^6*z^2, a+a^5*z+a^5*z^2, a^4+z+a^4*z^2, 1+a^2*z+a^3*z^2, a^3+a^4*z+a^2*z^2, a^6+a^6*z+a*z^2"), 21, Some(3))
        .mds(true, false, true).cyclic(SIGMA_7_8),
    row("(7,1,3;3)_8", 2, Rows(8, "
        1+a*z+a^6*z^2+z^3, 1+a^5*z+a^5*z^2+a^5*z^3, 1+a^2*z+a^4*z^2+a^3*z^3, 1+a^6*z+a^3*z^2+a*z^3, 1+a^3*z+a^2*z^2+a^6*z^3, 1+z+a*z^2+a^4*z^3, 1+a^4*z+z^2+a^2*z^3"), 28, Some(5))
        .mds(true, false, false).cyclic(SIGMA_7_8_B),
    row("(7,2,3;2)_8", 2, Rows(8, "
        1+z+a^4*z^2, a^4+a^5*z+a^5*z^2, a+a^3*z+a^6*z^2, a^5+a*z+z^2, a^2+a^6*z+a*z^2, a^6+a^4*z+a^2*z^2, a^3+a^2*z+a^3*z^2
        a+a*z, a^3+z, a^5+a^6*z, 1+a^5*z, a^2+a^4*z, a^4+a^3*z, a^6+a^2*z"), 14, Some(3))
        .mds(true, false, false).cyclic(SIGMA_7_8).row_sum(),
    // ---- group 3: punctured codes
    row("(6,3,3;1)_2", 3, Puncture("(7,3,3;1)_2", &[1, 2, 3, 5, 6, 7]), 6, Some(3)).even(Even),
    row("(6,3,6;2)_2", 3, Puncture("(7,3,6;2)_2", &[1, 2, 4, 5, 6, 7]), 10, Some(3)).even(Even),
    row("(14,4,4;1)_2", 3, Puncture("(15,4,4;1)_2", &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]), 14, Some(3))
        .even(NotEven),
    row("(13,4,4;1)_2", 3, Puncture("(15,4,4;1)_2", &[1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]), 13, Some(3))
        .even(NotEven),
    row("(12,4,4;1)_2", 3, Puncture("(15,4,4;1)_2", &[1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14]), 12, Some(3))
        .even(Even),
    row("(10,4,4;1)_2", 3, Puncture("(15,4,4;1)_2", &[1, 2, 4, 6, 7, 8, 9, 10, 11, 14]), 10, Some(4))
        .even(Even),
    row("(8,4,4;1)_2", 3, Puncture("(15,4,4;1)_2", &[1, 2, 4, 5, 8, 11, 13, 14]), 8, Some(4))
        .even(NotEven),
    row("(14,4,8;2)_2", 3, Puncture("(15,4,8;2)_2", &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]), 22, Some(6))
        .even(EvenQuestion),
    row("(13,4,8;2)_2", 3, Puncture("(15,4,8;2)_2", &[1, 2, 3, 4, 7, 8, 9, 10, 11, 12, 13, 14, 15]), 20, Some(6))
        .even(EvenQuestion),
    row("(12,4,8;2)_2", 3, Puncture("(15,4,8;2)_2", &[1, 2, 4, 7, 8, 9, 10, 11, 12, 13, 14, 15]), 18, Some(6))
        .even(NotEven),
    row("(10,4,8;2)_2", 3, Puncture("(15,4,8;2)_2", &[1, 2, 4, 5, 7, 8, 10, 11, 13, 14]), 16, Some(7))
        .even(EvenQuestion),
    row("(8,4,8;2)_2", 3, Puncture("(15,4,8;2)_2", &[1, 2, 6, 9, 12, 13, 14, 15]), 12, Some(9))
        .even(EvenQuestion),
];
