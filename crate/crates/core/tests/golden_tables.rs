mod common;

use common::*;
use kfib_core::poly;

#[test]
fn every_printed_cell_is_reproduced_or_a_proven_erratum() {
    let rep = compare_with_reference();
    assert!(rep.failures.is_empty(), "{:#?}", rep.failures);
    assert_eq!(rep.errata.len(), errata().len(), "{:#?}", rep.errata);
    assert!(rep.exact > 300, "{rep:?}");
}

#[test]
fn golden_file_has_all_rows() {
    let g = golden();
    let counts: Vec<usize> = ["table1", "table2", "table3", "table4"].iter().map(|t| g[*t].len()).collect();
    assert_eq!(counts, [24, 3, 10, 10]);
}

#[test]
fn product_parser() {
    let f = parse_product("x^2 (1+x^3)^2 (6 +4x^3 +x^6)");
    assert_eq!(f, poly(8, 3).unwrap());
    assert_eq!(parse_product("-x^3"), poly(-14, 4).unwrap());
    assert_eq!(parse_product("(1+x^4)^3"), poly(5, 4).unwrap());
}

#[test]
fn latex_normalization() {
    assert_eq!(normalize_latex(" $0^\\ell$  "), "0^l");
    assert_eq!(normalize_latex("$-18^{\\;}$"), "-18");
    assert_eq!(normalize_latex("$1 +2x^4 +x^{8}$"), "1+2x^4+x^8");
    assert_eq!(normalize_latex("$\\dots$"), "...");
}
