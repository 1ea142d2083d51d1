//! Roman numerals and English number names.
//!
//! Roman output is strict modern subtractive form (no IIII). English names
//! follow the American convention with no "and": lowercase words, spaces
//! between groups, a hyphen between tens and units.

use crate::error::SieveError;

const ROMAN_VALUES: [(u64, &str); 13] = [
    (1000, "M"),
    (900, "CM"),
    (500, "D"),
    (400, "CD"),
    (100, "C"),
    (90, "XC"),
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
];

pub fn to_roman(n: u64) -> Result<String, SieveError> {
    if !(1..=3999).contains(&n) {
        return Err(SieveError::RomanOutOfRange(n));
    }
    let mut out = String::new();
    let mut v = n;
    for (value, symbol) in ROMAN_VALUES {
        while v >= value {
            out.push_str(symbol);
            v -= value;
        }
    }
    Ok(out)
}

const ONES: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
    "nineteen",
];

const TENS: [&str; 10] = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

pub fn to_english(n: u64) -> Result<String, SieveError> {
    if n > 20_000 {
        return Err(SieveError::EnglishOutOfRange(n));
    }
    Ok(name_under_million(n))
}

fn name_under_million(n: u64) -> String {
    if n == 0 {
        return "zero".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut v = n;
    if v >= 1000 {
        parts.push(format!("{} thousand", name_under_million(v / 1000)));
        v %= 1000;
    }
    if v >= 100 {
        parts.push(format!("{} hundred", ONES[(v / 100) as usize]));
        v %= 100;
    }
    if v >= 20 {
        let tens = TENS[(v / 10) as usize];
        if v % 10 > 0 {
            parts.push(format!("{}-{}", tens, ONES[(v % 10) as usize]));
        } else {
            parts.push(tens.to_string());
        }
    } else if v > 0 {
        parts.push(ONES[v as usize].to_string());
    }
    parts.join(" ")
}

/// Letters of the English name with spaces and hyphens stripped, for
/// alphabetical-order checks.
pub fn english_letters(n: u64) -> Result<String, SieveError> {
    Ok(to_english(n)?.chars().filter(|c| c.is_ascii_alphabetic()).collect())
}
