use super::FpPresentation;

const BUILTINS: &[(&str, &str)] = &[
    ("trefoil", "<a,b | aba=bab>"),
    ("L7n1", "<a,b | (a,B^2)>"),
    ("L6a3", "<a,b | (a,b^3)>"),
    // printed with a stray "(a,t)"; the fourth generator is d
    ("D4-dynkin", "<a,b,c,d | (a,b), (a,c), (a,d)>"),
    ("Z2", "<a,b | (a,b)>"),
    ("Z3", "<a,b,c | (a,b), (a,c), (b,c)>"),
    ("2T", "<a,b | a^3 b^-3, a^3 (ab)^-2>"),
    ("F2", "<a,b | >"),
    ("Z6", "<a | a^6>"),
    ("S3", "<a,b | a^2, b^2, (ab)^3>"),
];

/// Names accepted by [`builtin`].
pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|(n, _)| *n)
}

/// Built-in presentation by name (case-sensitive).
pub fn builtin(name: &str) -> Option<FpPresentation> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.parse().expect("built-in presentation parses"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_parse() {
        for name in builtin_names() {
            assert!(builtin(name).is_some(), "{name}");
        }
        assert!(builtin("nope").is_none());
    }
}
