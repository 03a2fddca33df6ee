"""Core decomposition: h-index, partitions, summary validation, plausibility."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from citetrace import (
    CitationList,
    SummaryRecord,
    ValidationError,
    h_index,
    partition_from_list,
    partition_from_summary,
    plausibility_warnings,
    summarize,
)
from citetrace.partition import Partition

citation_lists = st.lists(st.integers(min_value=0, max_value=1000), min_size=1, max_size=200)


def h_oracle(counts):
    """Brute force: max over 1-based rank i of min(i, i-th largest count)."""
    ranked = sorted(counts, reverse=True)
    return max(min(i, c) for i, c in enumerate(ranked, start=1))


def recount(counts):
    """Exhaustive recount of every class mass, independent of the partition code."""
    ranked = sorted(counts, reverse=True)
    h = h_oracle(counts)
    return {
        "papers": len(counts),
        "citations": sum(counts),
        "core_papers": h,
        "uncited_papers": sum(1 for c in counts if c == 0),
        "core_citations": sum(ranked[:h]),
    }


class TestHIndex:
    def test_mixed_counts(self):
        assert h_index([10, 8, 5, 4, 3]) == 4

    def test_all_uncited(self):
        assert h_index([0, 0, 0]) == 0

    def test_single_cited_paper(self):
        assert h_index([1]) == 1

    def test_accepts_citation_list(self):
        assert h_index(CitationList("A", (10, 8, 5, 4, 3))) == 4

    @given(citation_lists)
    def test_matches_brute_force_oracle(self, counts):
        assert h_index(counts) == h_oracle(counts)

    @given(citation_lists, st.randoms())
    def test_permutation_invariant(self, counts, rng):
        shuffled = counts[:]
        rng.shuffle(shuffled)
        assert h_index(shuffled) == h_index(counts)


class TestPartitionFromList:
    def test_mixed_counts(self):
        part = partition_from_list(CitationList("A", (10, 8, 5, 4, 3)))
        assert part.core_papers == 4
        assert part.tail_papers == 1
        assert part.uncited_papers == 0
        assert part.core_base_citations == 16
        assert part.core_citations == 27
        assert part.excess_citations == 11
        assert part.tail_citations == 3
        assert part.citations == 30

    def test_all_uncited(self):
        part = partition_from_list([0, 0, 0, 0])
        assert part.core_papers == 0
        assert part.tail_papers == 0
        assert part.uncited_papers == 4
        assert part.citations == 0
        assert part.core_citations == 0
        assert part.excess_citations == 0
        assert part.tail_citations == 0

    def test_boundary_tie(self):
        part = partition_from_list([1, 1])
        assert part.core_papers == 1
        assert part.tail_papers == 1
        assert part.uncited_papers == 0
        assert part.core_base_citations == 1
        assert part.excess_citations == 0
        assert part.tail_citations == 1

    @given(citation_lists)
    def test_matches_exhaustive_recount(self, counts):
        part = partition_from_list(counts)
        expect = recount(counts)
        assert part.papers == expect["papers"]
        assert part.citations == expect["citations"]
        assert part.core_papers == expect["core_papers"]
        assert part.uncited_papers == expect["uncited_papers"]
        assert part.core_citations == expect["core_citations"]

    @given(citation_lists)
    def test_integer_identities_exact(self, counts):
        part = partition_from_list(counts)
        assert part.papers == part.core_papers + part.tail_papers + part.uncited_papers
        assert part.citations == (part.core_base_citations + part.tail_citations
                                  + part.excess_citations)
        assert part.core_base_citations == part.core_papers ** 2
        assert part.core_citations == part.core_base_citations + part.excess_citations

    @given(citation_lists)
    def test_summary_round_trip(self, counts):
        cl = CitationList("A", tuple(counts))
        direct = partition_from_list(cl)
        assert partition_from_summary(summarize(cl)) == direct


class TestPartitionFromSummary:
    def test_author_record(self):
        rec = SummaryRecord("Ye FY", papers=25, h=5, uncited=9, citations=72,
                            core_citations=51)
        part = partition_from_summary(rec)
        assert part.core_papers == 5
        assert part.tail_papers == 11
        assert part.core_base_citations == 25
        assert part.excess_citations == 26
        assert part.tail_citations == 21

    def test_university_record(self):
        rec = SummaryRecord("Univ Hamburg", papers=1949, h=19, uncited=1257,
                            citations=3185, core_citations=1243)
        part = partition_from_summary(rec)
        assert part.tail_papers == 673
        assert part.core_base_citations == 361
        assert part.excess_citations == 882
        assert part.tail_citations == 1942

    def test_core_citations_below_h_squared_rejected(self):
        with pytest.raises(ValidationError, match=r"Ch < h\^2"):
            SummaryRecord("X", papers=10, h=4, uncited=0, citations=20,
                          core_citations=15)


class TestSummaryValidation:
    def test_h_above_p(self):
        with pytest.raises(ValidationError, match="h > P"):
            SummaryRecord("X", papers=3, h=4, uncited=0, citations=20, core_citations=16)

    def test_uncited_above_p_minus_h(self):
        with pytest.raises(ValidationError, match="Pz > P - h"):
            SummaryRecord("X", papers=10, h=4, uncited=7, citations=20, core_citations=16)

    def test_core_citations_above_total(self):
        with pytest.raises(ValidationError, match="Ch > C"):
            SummaryRecord("X", papers=10, h=4, uncited=0, citations=20, core_citations=21)

    def test_h_zero_with_citations(self):
        with pytest.raises(ValidationError, match="h = 0"):
            SummaryRecord("X", papers=3, h=0, uncited=3, citations=5, core_citations=0)

    def test_negative_field(self):
        with pytest.raises(ValidationError):
            SummaryRecord("X", papers=10, h=4, uncited=-1, citations=20, core_citations=16)

    def test_empty_name(self):
        with pytest.raises(ValidationError):
            SummaryRecord("", papers=1, h=0, uncited=1, citations=0, core_citations=0)


class TestCitationListValidation:
    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            CitationList("A", ())

    def test_negative_count_rejected(self):
        with pytest.raises(ValidationError):
            CitationList("A", (3, -1))

    def test_non_integer_rejected(self):
        with pytest.raises(ValidationError):
            CitationList("A", (3, 1.5))


class TestPlausibilityWarnings:
    def test_author_partition_clean(self):
        rec = SummaryRecord("Ye FY", papers=25, h=5, uncited=9, citations=72,
                            core_citations=51)
        assert plausibility_warnings(partition_from_summary(rec)) == []

    def test_low_h_journal_clean(self):
        rec = SummaryRecord("Libr J", papers=8595, h=3, uncited=8561, citations=47,
                            core_citations=15)
        part = partition_from_summary(rec)
        assert (part.core_papers, part.tail_papers, part.tail_citations) == (3, 31, 32)
        assert plausibility_warnings(part) == []

    def test_tail_citations_below_tail_papers(self):
        part = Partition(papers=7, citations=7, core_papers=2, tail_papers=5,
                         uncited_papers=0, core_base_citations=4, excess_citations=0,
                         tail_citations=3, core_citations=4)
        warnings = plausibility_warnings(part)
        assert len(warnings) == 1
        assert "Ct=3" in warnings[0] and "Pt=5" in warnings[0]

    def test_tail_citations_above_ceiling(self):
        part = Partition(papers=4, citations=29, core_papers=2, tail_papers=2,
                         uncited_papers=0, core_base_citations=4, excess_citations=0,
                         tail_citations=25, core_citations=4)
        warnings = plausibility_warnings(part)
        assert len(warnings) == 1
        assert "ceiling" in warnings[0]
