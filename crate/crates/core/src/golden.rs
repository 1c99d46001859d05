//! Reference values of `I_n(q,t)` and `Ĩ_n(q,t)` (n = 1..4) and of their
//! `q = -1` specializations (n = 1..7), kept as text in display order.

use crate::bipoly::BivariatePolynomial;

/// `(n, I_n(q,t), Ĩ_n(q,t))`.
pub const QT_TABLE: [(usize, &str, &str); 4] = [
    (1, "1", "1"),
    (2, "q + t + 1", "q + t + 1"),
    (
        3,
        "q^3 + q^2t + 2q^2 + 4qt + t^2 + 2q + 4t + 1",
        "q^3 + q^2t + 2q^2 + 4qt + t^2 + 2q + 4t + 1",
    ),
    (
        4,
        "q^6 + q^5t + 3q^5 + 5q^4t + q^3t^2 + 5q^4 + 13q^3t + 5q^2t^2 + 6q^3 + 20q^2t \
         + 11qt^2 + t^3 + 5q^2 + 22qt + 11t^2 + 3q + 11t + 1",
        "q^6 + q^5t + 3q^5 + 5q^4t + q^3t^2 + 5q^4 + 13q^3t + 5q^2t^2 + 6q^3 + 20q^2t \
         + 12qt^2 + t^3 + 5q^2 + 21qt + 11t^2 + 3q + 11t + 1",
    ),
];

/// `(n, I_n(-1,t), Ĩ_n(-1,t))`.
pub const MINUS_ONE_TABLE: [(usize, &str, &str); 7] = [
    (1, "1", "1"),
    (2, "t", "t"),
    (3, "t^2 + t", "t^2 + t"),
    (4, "t^3 + 4t^2", "t^3 + 3t^2 + t"),
    (5, "t^4 + 11t^3 + 4t^2", "t^4 + 7t^3 + 7t^2 + t"),
    (6, "t^5 + 26t^4 + 34t^3", "t^5 + 14t^4 + 31t^3 + 14t^2 + t"),
    (
        7,
        "t^6 + 57t^5 + 180t^4 + 34t^3",
        "t^6 + 26t^5 + 109t^4 + 109t^3 + 26t^2 + t",
    ),
];

/// `I_4(1,t)` and `Ĩ_4(1,t)`, quoted alongside the tables to show the two
/// analogues already differ at `q = 1`.
pub const AT_Q_ONE_N4: (&str, &str) = ("t^3 + 28t^2 + 72t + 24", "t^3 + 29t^2 + 71t + 24");

fn parse(s: &str) -> BivariatePolynomial {
    s.parse().expect("golden data parses")
}

/// `I_n(q,t)` for `n <= 4`.
pub fn tree_qt(n: usize) -> Option<BivariatePolynomial> {
    QT_TABLE.iter().find(|r| r.0 == n).map(|r| parse(r.1))
}

/// `Ĩ_n(q,t)` for `n <= 4`.
pub fn parking_qt(n: usize) -> Option<BivariatePolynomial> {
    QT_TABLE.iter().find(|r| r.0 == n).map(|r| parse(r.2))
}

/// `I_n(-1,t)` for `n <= 7`.
pub fn tree_minus_one(n: usize) -> Option<BivariatePolynomial> {
    MINUS_ONE_TABLE.iter().find(|r| r.0 == n).map(|r| parse(r.1))
}

/// `Ĩ_n(-1,t)` for `n <= 7`.
pub fn parking_minus_one(n: usize) -> Option<BivariatePolynomial> {
    MINUS_ONE_TABLE.iter().find(|r| r.0 == n).map(|r| parse(r.2))
}
