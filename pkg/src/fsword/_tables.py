"""Morphisms f_0..f_32 and the explicit circular words, transcribed verbatim."""

# id -> images of a, b, c, d; declared lengths kept separately as printed
MORPHISMS = {
    0: (
        "011001110001100101110001",
        "011001110001100101100010111001",
        "01100111000101110010110001011100011001011000111001",
        "011001110001011100101100011100101110001011000111001",
    ),
    1: (
        "110001100101110001011001",
        "11000110010110001110010110011100010111001011000101",
        "110001100101100010111001011001110001011000111001011001",
        "1100011001011000111001011100010110011100010111001011001",
    ),
    2: (
        "110001100101100010111001011001",
        "11000110010111000101100011100101110001011001",
        "11000110010110001110010110011100010111001011000101",
        "110001100101100011100101110001011000111001011000101",
    ),
    3: (
        "0110011100011001011000111001",
        "0110011100010111001011000101110001100101100010111001",
        "01100111000110010111000101100011100101110001100101100010111001",
        "011001110001011000111001011000101110001100101100011100101110001",
    ),
    4: (
        "0101100011100101100111000101110",
        "010110001110010111000101100111000110",
        "01011000111001011100011001011000101110010110011100",
        "010110001110010111000110010110001011100011001011100",
    ),
    5: (
        "010110001110010110011100011001011100",
        "01011000111001011001110001011100101100010111000110",
        "010110001110010111000110010110001011100101100111000110",
        "0101100011100101110001011001110001011100101100111000110",
    ),
    6: (
        "01011000111001011001110001011100101100010111000110",
        "0101100011100101110001011001110001011100101100111000110",
        "01011000111001011100011001011000101110010110011100011001011100",
        "010110001110010111000101100111000110010110001011100011001011100",
    ),
    7: (
        "011001110001011100101100011100101110001",
        "01100111000110010111000101100011100101110001",
        "011001110001100101100011100101110001100101100010111001",
        "0110011100011001011000101110001100101110001011000111001",
    ),
    8: (
        "0101100011100101100111000110",
        "010110001110010111000101100111000101110010110011100",
        "01011000111001011100011001011000101110010110011100011001011100",
        "010110001110010111000101100111000110010110001011100011001011100",
    ),
    9: (
        "110001100101100010111001011001",
        "110001100101100011100101110001011001",
        "1100011001011000111001011001110001011000111001011000101",
        "11000110010111000101100011100101100111000101100011100101",
    ),
    10: (
        "011001110001011100101100011100101110001",
        "01100111000101110010110001011100011001011000111001",
        "011001110001100101100011100101110001100101100010111001",
        "0110011100011001011000101110001100101110001011000111001",
    ),
    11: (
        "110001100101100010111001011001",
        "11000110010111000101100011100101",
        "11000110010110001110010110011100010111001011000101",
        "110001100101100011100101110001011000111001011000101",
    ),
    12: (
        "11000110010111000101100011100101110001011001",
        "110001100101100011100101110001011000111001011000101",
        "110001100101100010111001011001110001011000111001011000101",
        "1100011001011100010110001110010110011100010111001011000101",
    ),
    13: (
        "000111001011001110001100101110001011",
        "000111001011000101110010110011100011001011",
        "00011100101110001100101100010111001011001110001011",
        "000111001011100010110011100010111001011001110001011",
    ),
    14: (
        "000111001011001110001011",
        "00011100101110001011001110001100101110001011",
        "0001110010111000101100111000101110010110011100011001011",
        "0001110010111000110010110001011100011001011100010110011100011001011",
    ),
    15: (
        "110011100011001011100010110001110010111000110010110001110010",
        "11001110001100101100010111001011000111001011100010110001110010",
        "11001110001100101100011100101110001011000111001011000101110010",
        "110011100011001011000101110001100101110001011000111001011100010",
    ),
    16: (
        "01100111000101110010110001011100011001011000111001",
        "01100111000110010110001011100101100011100101110001",
        "01100111000110010111000101100011100101100010111001",
        "011001110001011100101100011100101110001011000111001",
    ),
    17: (
        "110011100011001011100010",
        "110011100011001011000111001011100010110001110010",
        "110011100010111001011000111001011100011001011000101110010",
        "1100111000101110010110001011100011001011100010110001110010",
    ),
    18: (
        "110011100011001011100010",
        "110011100010111001011000111001011100010110001110010",
        "110011100011001011000111001011100011001011000101110010",
        "1100111000110010110001011100011001011100010110001110010",
    ),
    19: (
        "110011100011001011100010",
        "1100111000101110010110001011100011001011000101110010",
        "110011100011001011000111001011100011001011000101110010",
        "1100111000110010110001011100011001011100010110001110010",
    ),
    20: (
        "1100111000110010110001110010",
        "11001110001011000111001011100010",
        "110011100010111001011000111001011100010110001110010",
        "1100111000101110010110001011100011001011000101110010",
    ),
    21: (
        "1100111000110010110001110010",
        "11001110001100101110001011000111001011100010",
        "110011100010111001011000111001011100011001011000101110010",
        "1100111000101110010110001011100011001011000111001011100010",
    ),
    22: (
        "1100111000110010110001110010",
        "1100111000101110010110001011100011001011100010",
        "110011100010111001011000111001011100010110001110010",
        "1100111000101110010110001011100011001011000101110010",
    ),
    23: (
        "1100111000110010110001110010",
        "11001110001100101110001011000111001011000101110010",
        "11001110001011000111001011100011001011000111001011100010",
        "110011100010111001011000111001011100011001011000101110010",
    ),
    24: (
        "1100111000110010110001110010",
        "11001110001100101110001011000111001011000101110010",
        "110011100010111001011000111001011100011001011000101110010",
        "1100111000101110010110001011100011001011000111001011100010",
    ),
    25: (
        "1100111000110010110001110010",
        "11001110001011000111001011100011001011000111001011100010",
        "110011100010111001011000111001011100011001011000101110010",
        "1100111000101110010110001011100011001011100010110001110010",
    ),
    26: (
        "1100111000110010110001110010",
        "110011100010111001011000111001011100011001011000101110010",
        "11001110001100101110001011000111001011100011001011000101110010",
        "110011100010110001110010110001011100011001011000111001011100010",
    ),
    27: (
        "11001110001011000111001011100010",
        "110011100011001011100010110001110010",
        "110011100011001011000111001011100011001011000101110010",
        "1100111000101110010110001110010111000110010110001110010",
    ),
    28: (
        "11001110001011000111001011100010",
        "11001110001011100101100010111000110010110001110010",
        "110011100011001011000111001011100011001011000101110010",
        "1100111000110010110001011100011001011100010110001110010",
    ),
    29: (
        "110011100011001011000111001011100010",
        "11001110001100101110001011000111001011000101110010",
        "110011100010111001011000111001011100010110001110010",
        "1100111000101110010110001011100011001011000101110010",
    ),
    30: (
        "110011100011001011100010110001110010",
        "11001110001011100101100010111000110010110001110010",
        "11001110001100101100011100101110001011000111001011000101110010",
        "110011100011001011000101110001100101110001011000111001011100010",
    ),
    31: (
        "110011100010111001011000111001011100010",
        "110011100011001011000111001011100010110001110010",
        "11001110001100101110001011000111001011100011001011000101110010",
        "110011100011001011000101110001100101110001011000111001011100010",
    ),
    32: (
        "11001110001100101110001011000111001011100010",
        "1100111000101110010110001011100011001011000101110010",
        "110011100011001011000111001011100011001011000101110010",
        "1100111000110010110001011100011001011100010110001110010",
    ),
}

DECLARED_LENGTHS = {
    0: (24, 30, 50, 51),
    1: (24, 50, 54, 55),
    2: (30, 44, 50, 51),
    3: (28, 52, 62, 63),
    4: (31, 36, 50, 51),
    5: (36, 50, 54, 55),
    6: (50, 55, 62, 63),
    7: (39, 44, 54, 55),
    8: (28, 51, 62, 63),
    9: (30, 36, 55, 56),
    10: (39, 50, 54, 55),
    11: (30, 32, 50, 51),
    12: (44, 51, 57, 58),
    13: (36, 42, 50, 51),
    14: (24, 44, 55, 67),
    15: (60, 62, 62, 63),
    16: (50, 50, 50, 51),
    17: (24, 48, 57, 58),
    18: (24, 51, 54, 55),
    19: (24, 52, 54, 55),
    20: (28, 32, 51, 52),
    21: (28, 44, 57, 58),
    22: (28, 46, 51, 52),
    23: (28, 50, 56, 57),
    24: (28, 50, 57, 58),
    25: (28, 56, 57, 58),
    26: (28, 57, 62, 63),
    27: (32, 36, 54, 55),
    28: (32, 50, 54, 55),
    29: (36, 50, 51, 52),
    30: (36, 50, 62, 63),
    31: (39, 48, 62, 63),
    32: (44, 52, 54, 55),
}

# length -> word
EXPLICIT_WORDS = {
    1: "0",
    2: "00",
    3: "000",
    4: "0001",
    5: "00011",
    6: "000111",
    7: "0001011",
    8: "00010111",
    12: "000101100111",
    14: "00010111001011",
    19: "0001011100011001011",
    20: "00010110001110010111",
    24: "000101100011100101100111",
    28: "0001100101100011100101100111",
    30: "000101110010110011100011001011",
    36: "000101100011100101100111000110010111",
    38: "00010110001110010110001011100101100111",
    39: "000101100011100101100010111000110010111",
    43: "0001011001110001011100101100111000110010111",
    44: "00010110001110010111000101100111000110010111",
    46: "0001011001110001011100101100010111000110010111",
    48: "000101100011100101100111000110010110001110010111",
    50: "00010110001110010110001011100101100111000110010111",
    51: "000101100011100101100010111000110010110001110010111",
    52: "0001011001110001100101100011100101100111000110010111",
    55: "0001011000111001011000101110001100101100011100101100111",
    57: "000101100011100101100010111000110010110001011100101100111",
    58: "0001011000111001011001110001011100101100010111000110010111",
    63: "000101100011100101110001011001110001011100101100111000110010111",
    65: "00010110001110010110001011100011001011000101110010110001110010111",
    69: "000101100011100101100010111000110010110001011100101100111000110010111",
    70: "0001011000111001011000101110001100101110001011001110001011100101100111",
    71: "00010110011100010111001011001110001100101100011100101100111000110010111",
    77: "00010110001110010110001011100011001011100010110001110010110001011100101100111",
    116: "00010110001110010110001011100011001011000101110010110001110010111000101100011100101100111000101110010110001110010111",
    127: "0001110010111000101100111000110010110001011100011001011100010110001110010110011100010111001011000101110001100101100010111001011",
}

# length -> (morphism id, source word); expanded at load time
MORPHIC_WORDS = {
    232: (27, "abdcd"),
    241: (29, "abdcd"),
    253: (10, "abdcd"),
}
