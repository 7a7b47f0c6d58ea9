use clap::ValueEnum;
use touchard_core::{
    catalan_to_g, drop_restriction, g_to_catalan, motzkin_merge, motzkin_split, pair_decode,
    pair_encode, raise_restriction, touchard_merge, touchard_split, DyckWord, Error, GWord,
    MotzkinDecomposition, RestrictedGWord, TouchardDecomposition,
};

/// One map per direction; each has its inverse in the list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Encode,
    Decode,
    Drop,
    Raise,
    C2g,
    G2c,
    Tsplit,
    Tmerge,
    Msplit,
    Mmerge,
}

fn nonempty_dyck(line: &str) -> Result<DyckWord, Error> {
    let w: DyckWord = line.parse()?;
    if w.semilength() == 0 {
        return Err(Error::Malformed(
            "the pair encoding needs a Dyck word of semilength >= 1".into(),
        ));
    }
    Ok(w)
}

impl Direction {
    #[cfg(test)]
    pub fn inverse(self) -> Direction {
        use Direction::*;
        match self {
            Encode => Decode,
            Decode => Encode,
            Drop => Raise,
            Raise => Drop,
            C2g => G2c,
            G2c => C2g,
            Tsplit => Tmerge,
            Tmerge => Tsplit,
            Msplit => Mmerge,
            Mmerge => Msplit,
        }
    }

    pub fn apply(self, line: &str) -> Result<String, Error> {
        Ok(match self {
            Direction::Encode => pair_encode(&nonempty_dyck(line)?).to_string(),
            Direction::Decode => pair_decode(&line.parse::<RestrictedGWord>()?).to_string(),
            Direction::Drop => drop_restriction(&line.parse::<RestrictedGWord>()?).to_string(),
            Direction::Raise => raise_restriction(&line.parse::<GWord>()?).to_string(),
            Direction::C2g => catalan_to_g(&nonempty_dyck(line)?).to_string(),
            Direction::G2c => g_to_catalan(&line.parse::<GWord>()?).to_string(),
            Direction::Tsplit => touchard_split(&line.parse::<GWord>()?).to_string(),
            Direction::Tmerge => {
                touchard_merge(&line.parse::<TouchardDecomposition>()?)?.to_string()
            }
            Direction::Msplit => motzkin_split(&line.parse::<GWord>()?).to_string(),
            Direction::Mmerge => motzkin_merge(&line.parse::<MotzkinDecomposition>()?)?.to_string(),
        })
    }
}
