#[test]
fn matrices_match_reference_file() {
    let expected = include_str!("../reference/transition_matrices.txt");
    assert_eq!(apollon::cli::matrices_text(), expected);
}
