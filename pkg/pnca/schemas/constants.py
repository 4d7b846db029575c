# 演算法上限（屬於介面約定，不放在環境變數）
MAX_PRIMITIVE_DEGREE = 32
MAX_SYNTH_DEGREE = 24
MAX_CENSUS_CELLS = 26

# 對稱類別（cycle census 的 histogram key）
SYM_DOUBLY = "doubly_symmetric"
SYM_SYMMETRIC = "symmetric"
SYM_REPETITIVE = "repetitive"
SYM_OTHER = "other"
SYMMETRY_CLASSES = (SYM_DOUBLY, SYM_SYMMETRIC, SYM_REPETITIVE, SYM_OTHER)

# === 範例資料：三格自動機（150 90 90）與其反轉 ===
EXAMPLE_POLY_R3 = "x^3+x^2+1"
EXAMPLE_RULE_R3 = "100"
EXAMPLE_RULE_R3_REVERSED = "001"
EXAMPLE_SEED_R3 = "101"
EXAMPLE_SEED_R3_REVERSED = "110"
EXAMPLE_PN_R3 = "1110100"
EXAMPLE_ROWS_R3 = ("101", "100", "110", "011", "111", "001", "010")
EXAMPLE_ROWS_R3_REVERSED = ("110", "111", "100", "010", "101", "001", "011")

# === 範例資料：五格自動機串接到 P(x)^4 ===
EXAMPLE_POLY_R5 = "x^5+x^4+x^2+x+1"
EXAMPLE_RULE_R5 = "10000"
EXAMPLE_RULE_R5_REVERSED = "00001"
EXAMPLE_MULTIPLICITY = 4
EXAMPLE_RULE_20 = "10001100000000110001"

# census 預期：{cycle 長度: cycle 數}
EXAMPLE_CENSUS_20 = {1: 1, 31: 1, 62: 16, 124: 8448}
# 每個 class 的 shift-inequivalent 解數與 LC
EXAMPLE_CLASS_COUNTS = {0: 1, 1: 16, 2: 256, 3: 8192}
EXAMPLE_CLASS_LC = {0: 5, 1: 10, 2: 15, 3: 20}
EXAMPLE_CLASS_PERIOD = {0: 31, 1: 62, 2: 124, 3: 124}

# 二項式係數 mod 2 的前 8 列（n = 0..7）與週期
BINOMIAL_ROWS = (
    "11111111",
    "01010101",
    "00110011",
    "00010001",
    "00001111",
    "00000101",
    "00000011",
    "00000001",
)
BINOMIAL_PERIODS = (1, 2, 4, 4, 8, 8, 8, 8)

# shrinking generator 範例設定
SHRINK_CONTROL_POLY = "x^3+x^2+1"
SHRINK_CONTROL_SEED = "111"
SHRINK_DATA_POLY = "x^5+x^4+x^2+x+1"
SHRINK_DATA_SEED = "00001"
SHRINK_PERIOD = 124
