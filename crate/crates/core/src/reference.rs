//! Published table rows for `n = 2..8`, kept verbatim (including their
//! irregular spacing) so rendered output can be compared after whitespace
//! normalization.

/// `(n, row)` for the classes `[F_n(E)]`.
pub const FN_ROWS: [(usize, &str); 7] = [
    (2, "2 & $E^2 - E$ \\\\"),
    (3, "3 & $E^3 - 3E^2 + 2E$ \\\\"),
    (4, "4 & $E^4 - 6E^3 + 11E^2 - 6E$ \\\\"),
    (5, "5 & $E^5 - 10E^4 + 35E^3 - 50E^2 + 24E$ \\\\"),
    (6, "6 & $E^6 - 15E^5 + 85E^4 - 225E^3 + 274E^2 - 120E$ \\\\"),
    (
        7,
        "7 & $E^7 - 21E^6 + 175E^5 - 735E^4 + 1624E^3 - 1764E^2 + 720E$ \\\\",
    ),
    (
        8,
        "8 & $E^8- 28E^7 + 322E^6 - 1960E^5 + 6769E^4 - 13132E^3 + 13068E^2 - 5040E$ \\\\",
    ),
];

/// `(n, row)` for the classes `[F_n^0(E)]`.
pub const FN0_ROWS: [(usize, &str); 7] = [
    (2, "2  & $E-4$ \\\\"),
    (3, "3  & $E^2 - 3E + 18$ \\\\"),
    (4, "4 & $E^3 - 6E^2 + 20E - 96$ \\\\"),
    (5, "5  & $E^4 - 10E^3 + 35E^2 - 50E + 600$ \\\\"),
    (6, "6  & $E^5 - 15E^4 + 85E^3 - 270E^2 + 864E - 4320$ \\\\"),
    (
        7,
        "7  & $E^6 - 21E^5 + 175E^4 - 735E^3 + 1624E^2 - 1764E + 35280$ \\\\",
    ),
    (
        8,
        "8  & $E^7 - 28E^6 + 322E^5 - 1960E^4 + 7084E^3 - 16912E^2 + 42048E - 322560$ \\\\",
    ),
];

/// Drops all whitespace.
pub fn strip_whitespace(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}
