#pragma once

// Hard-coded firing data for the exceptional convergent plans and the
// sporadic divergence certificates.  Transcription drift is guarded by the
// replay tests: every sequence is played symbolically or exactly and must
// reproduce its documented terminal or family.

namespace ngame::detail {

inline constexpr int kF4Sequence[] = {1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 2, 3, 2, 1, 4, 3, 2, 3, 4, 2, 1, 3, 2, 3};

inline constexpr int kE6Sequence[] = {1, 2, 3, 4, 3, 2, 1, 4, 3, 4, 5, 4, 2, 3, 4, 1, 3, 5, 6, 4, 5, 4, 2, 3, 1, 4, 3, 1, 5, 4, 2, 6, 5, 4, 3, 1};

inline constexpr int kE7Sequence[] = {1, 2, 3, 4, 3, 2, 1, 4, 3, 4, 5, 4, 2, 3, 4, 1, 3, 5, 6, 4, 5, 4, 2, 3, 1, 4, 3, 1, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7};

inline constexpr int kE8Sequence[] = {1, 2, 3, 4, 3, 2, 1, 4, 3, 4, 5, 4, 2, 3, 4, 1, 3, 5, 6, 4, 5, 4, 2, 3, 1, 4, 3, 1, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 7, 5, 6, 4, 3, 1, 5, 4, 2, 3, 4, 5, 6, 7, 8};

inline constexpr int kEt7W1Cycle[] = {1, 4, 5, 3, 2, 6, 5, 3, 4, 5, 6, 7, 6, 5, 3, 2, 4, 5, 3, 6, 5, 4};

inline constexpr int kEt7W4Cycle[] = {4, 5, 3, 2, 6, 5, 3, 4, 5, 6, 7, 6, 5, 3, 2, 4, 5, 3, 6, 5, 4, 1};

inline constexpr int kEt7W5Prefix[] = {5, 3, 2, 4, 1, 5, 3, 4, 5, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5};

inline constexpr int kEt7W5Cycle[] = {7, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5, 6};

inline constexpr int kEt8W1Cycle[] = {1, 3, 4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3};

inline constexpr int kEt8W2Prefix[] = {2, 5, 4, 3, 6, 5, 2, 4, 5, 6, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 8, 7, 6, 5, 2, 1, 3, 4, 5};

inline constexpr int kEt8W2Cycle[] = {2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 1, 3, 4, 5};

inline constexpr int kEt8W3Cycle[] = {3, 4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 1};

inline constexpr int kEt8W4Prefix[] = {4, 3, 5, 2, 4, 5, 6, 5, 2, 4, 3, 5, 4, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 1, 3};

inline constexpr int kEt8W4Cycle[] = {4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 1, 3};

inline constexpr int kEt8W5Prefix[] = {5, 2, 4, 3, 5, 4, 6, 5, 2, 4, 3, 5, 4, 6, 5, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 2, 4, 5, 1, 3, 4};

inline constexpr int kEt8W5Cycle[] = {5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 1, 3, 4};

inline constexpr int kEt9W1Cycle[] = {1, 3, 4, 2, 5, 4, 3, 6, 5, 4, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 2, 9, 8, 7, 6, 5, 4, 3};

inline constexpr int kEt9S[] = {2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7};

inline constexpr int kEt9W3Prefix[] = {3, 1, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 9, 8};

inline constexpr int kEt9W4Cycle[] = {4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7, 2};

inline constexpr int kEt9W5Prefix[] = {5, 4, 3, 1, 6, 5, 4, 3, 7, 6, 5, 4, 8, 7, 6, 5, 9, 8, 7, 6};

inline constexpr int kEt9W6Prefix[] = {6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 9, 8, 7, 6, 5};

inline constexpr int kEt9W7Prefix[] = {7, 6, 5, 4, 3, 1, 8, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4};

inline constexpr int kEt9W8Prefix[] = {8, 7, 6, 5, 4, 3, 1, 9, 8, 7, 6, 5, 4, 3, 2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7, 2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6};

inline constexpr int kEt9W9Cycle[] = {9, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8};

}  // namespace ngame::detail
