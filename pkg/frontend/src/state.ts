import type {
  ApiResponse,
  DialectChoice,
  Language,
  ViewTab,
} from './types.js';

/**
 * Interface state plus its pure transitions.
 *
 * Everything the screen shows is derived from this record and the
 * stored API response; transitions never touch the network, so a view
 * tab switch is always a pure re-render.
 */
export interface UiState {
  inputText: string;
  dialect: DialectChoice;
  response: ApiResponse | null;
  activeTab: ViewTab;
  selectedWord: number;
  selectedAnalysis: number;
  language: Language;
  pending: boolean;
  error: string | null;
}

export function initialState(): UiState {
  return {
    inputText: '',
    dialect: 'auto',
    response: null,
    activeTab: 'diac_pos',
    selectedWord: 0,
    selectedAnalysis: 0,
    language: 'en',
    pending: false,
    error: null,
  };
}

export function setInput(state: UiState, inputText: string): UiState {
  return { ...state, inputText };
}

export function setDialect(state: UiState, dialect: DialectChoice): UiState {
  return { ...state, dialect };
}

export function submitStarted(state: UiState): UiState {
  return { ...state, pending: true, error: null };
}

export function submitSucceeded(state: UiState, response: ApiResponse): UiState {
  // top word and its top analysis are selected by default
  return {
    ...state,
    response,
    selectedWord: 0,
    selectedAnalysis: 0,
    pending: false,
    error: null,
  };
}

export function submitFailed(state: UiState, message: string): UiState {
  // prior response stays on screen; only the banner changes
  return { ...state, pending: false, error: message };
}

export function selectWord(state: UiState, index: number): UiState {
  const words = state.response?.words ?? [];
  if (!Number.isInteger(index) || index < 0 || index >= words.length) {
    return state;
  }
  // switching words always resets the analysis selection to the top one
  return { ...state, selectedWord: index, selectedAnalysis: 0 };
}

export function selectAnalysis(state: UiState, index: number): UiState {
  const analyses = state.response?.words[state.selectedWord]?.analyses ?? [];
  if (!Number.isInteger(index) || index < 0 || index >= analyses.length) {
    return state;
  }
  return { ...state, selectedAnalysis: index };
}

export function setTab(state: UiState, activeTab: ViewTab): UiState {
  return { ...state, activeTab };
}

export function setLanguage(state: UiState, language: Language): UiState {
  return { ...state, language };
}
