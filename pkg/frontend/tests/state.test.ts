import { describe, expect, it } from 'vitest';

import {
  initialState,
  selectAnalysis,
  selectWord,
  setTab,
  submitFailed,
  submitStarted,
  submitSucceeded,
} from '../src/state.js';
import type { AnalysisOut, ApiResponse } from '../src/types.js';

function analysis(diac: string, score: number): AnalysisOut {
  return {
    diac,
    pos: 'noun',
    lemma: diac,
    tokens: [diac],
    gloss: 'x',
    features: { pos: 'noun' },
    score,
  };
}

function response(): ApiResponse {
  return {
    dialect_used: 'msa',
    words: [
      {
        raw: 'w0',
        top: analysis('a0', 0.9),
        analyses: [analysis('a0', 0.9), analysis('a1', 0.5)],
      },
      {
        raw: 'w1',
        top: analysis('b0', 0.8),
        analyses: [analysis('b0', 0.8), analysis('b1', 0.6),
                   analysis('b2', 0.1)],
      },
    ],
    views: {
      diac_pos: 'a0/noun b0/noun',
      tokenized: 'a0 b0',
      lemmatized: 'a0 b0',
    },
  };
}

describe('submit lifecycle', () => {
  it('selects word 0 and analysis 0 on success', () => {
    let state = submitStarted({
      ...initialState(),
      selectedWord: 5,
      selectedAnalysis: 3,
    });
    expect(state.pending).toBe(true);
    state = submitSucceeded(state, response());
    expect(state.pending).toBe(false);
    expect(state.selectedWord).toBe(0);
    expect(state.selectedAnalysis).toBe(0);
    expect(state.response).not.toBeNull();
  });

  it('preserves the prior response on failure', () => {
    const good = submitSucceeded(initialState(), response());
    const failed = submitFailed(submitStarted(good), 'boom');
    expect(failed.error).toBe('boom');
    expect(failed.response).toEqual(good.response);
    expect(failed.pending).toBe(false);
  });
});

describe('selection rules', () => {
  const base = submitSucceeded(initialState(), response());

  it('changing the word resets the analysis to the top one', () => {
    const picked = selectAnalysis(base, 1);
    expect(picked.selectedAnalysis).toBe(1);
    const moved = selectWord(picked, 1);
    expect(moved.selectedWord).toBe(1);
    expect(moved.selectedAnalysis).toBe(0);
  });

  it('ignores out-of-range word indices', () => {
    expect(selectWord(base, 999)).toBe(base);
    expect(selectWord(base, -1)).toBe(base);
    expect(selectWord(base, 1.5)).toBe(base);
  });

  it('ignores out-of-range analysis indices', () => {
    expect(selectAnalysis(base, 2)).toBe(base);
    const onWord1 = selectWord(base, 1);
    expect(selectAnalysis(onWord1, 2).selectedAnalysis).toBe(2);
    expect(selectAnalysis(onWord1, 3)).toBe(onWord1);
  });

  it('ignores selections before any response', () => {
    const empty = initialState();
    expect(selectWord(empty, 0)).toBe(empty);
    expect(selectAnalysis(empty, 0)).toBe(empty);
  });
});

describe('view tabs', () => {
  it('switches tab without touching the stored response', () => {
    const base = submitSucceeded(initialState(), response());
    const switched = setTab(base, 'tokenized');
    expect(switched.activeTab).toBe('tokenized');
    expect(switched.response).toBe(base.response);
  });
});
