import { ApiError, disambiguate } from './api.js';
import { STRINGS, direction } from './i18n.js';
import {
  UiState,
  initialState,
  selectAnalysis,
  selectWord,
  setDialect,
  setInput,
  setLanguage,
  setTab,
  submitFailed,
  submitStarted,
  submitSucceeded,
} from './state.js';
import type { DialectChoice, ViewTab } from './types.js';

const DIALECT_ORDER: DialectChoice[] = ['auto', 'msa', 'egy', 'glf', 'lev'];
const TAB_ORDER: ViewTab[] = ['diac_pos', 'tokenized', 'lemmatized'];
const LIST_COLUMNS = ['score', 'diac', 'lemma', 'pos', 'gen', 'num', 'per'];
const NARROW_WIDTH = 480;

export interface AppOptions {
  baseUrl?: string;
}

export interface AppHandle {
  root: HTMLElement;
  getState(): UiState;
}

export function createApp(root: HTMLElement, options: AppOptions = {}): AppHandle {
  const baseUrl = options.baseUrl ?? '';
  const doc = root.ownerDocument;
  let state = initialState();

  root.innerHTML = `
    <div class="app" id="app-container">
      <header class="app-header">
        <h1 id="app-title"></h1>
        <button type="button" id="language-toggle"></button>
      </header>
      <section class="area" id="input-area">
        <textarea id="input-text" rows="3"></textarea>
        <div class="controls">
          <label id="dialect-label" for="dialect-select"></label>
          <select id="dialect-select"></select>
          <button type="button" id="submit-button"></button>
        </div>
        <div class="error-banner" id="error-banner" hidden></div>
      </section>
      <section class="area" id="output-area" hidden>
        <p class="dialect-indicator">
          <span id="indicator-label"></span>
          <strong id="dialect-indicator"></strong>
        </p>
        <nav class="view-tabs" id="view-tabs"></nav>
        <div class="output-box" id="output-box" dir="rtl"></div>
      </section>
      <section class="area analysis-area" id="analysis-area" hidden>
        <div class="box" id="analysis-list-box">
          <h2 id="analysis-list-title"></h2>
          <table class="analysis-table">
            <thead><tr id="analysis-list-head"></tr></thead>
            <tbody id="analysis-list"></tbody>
          </table>
        </div>
        <div class="box" id="analysis-viewer-box">
          <h2 id="analysis-viewer-title"></h2>
          <div id="analysis-viewer"></div>
        </div>
      </section>
    </div>`;

  const refs = {
    container: query('#app-container'),
    title: query('#app-title'),
    languageToggle: query<HTMLButtonElement>('#language-toggle'),
    inputText: query<HTMLTextAreaElement>('#input-text'),
    dialectLabel: query('#dialect-label'),
    dialectSelect: query<HTMLSelectElement>('#dialect-select'),
    submitButton: query<HTMLButtonElement>('#submit-button'),
    errorBanner: query('#error-banner'),
    outputArea: query('#output-area'),
    indicatorLabel: query('#indicator-label'),
    dialectIndicator: query('#dialect-indicator'),
    viewTabs: query('#view-tabs'),
    outputBox: query('#output-box'),
    analysisArea: query('#analysis-area'),
    analysisListTitle: query('#analysis-list-title'),
    analysisListHead: query('#analysis-list-head'),
    analysisList: query('#analysis-list'),
    analysisViewerTitle: query('#analysis-viewer-title'),
    analysisViewer: query('#analysis-viewer'),
  };

  function query<T extends HTMLElement = HTMLElement>(selector: string): T {
    const el = root.querySelector<T>(selector);
    if (!el) throw new Error(`missing element ${selector}`);
    return el;
  }

  for (const dialect of DIALECT_ORDER) {
    const option = doc.createElement('option');
    option.value = dialect;
    refs.dialectSelect.appendChild(option);
  }
  for (const tab of TAB_ORDER) {
    const button = doc.createElement('button');
    button.type = 'button';
    button.dataset.tab = tab;
    refs.viewTabs.appendChild(button);
  }

  function update(next: UiState): void {
    state = next;
    render();
  }

  async function submit(): Promise<void> {
    if (state.pending) return;
    const text = state.inputText.trim();
    if (!text) {
      // inline validation only; nothing is sent
      update(submitFailed(state, STRINGS[state.language].emptyInput));
      return;
    }
    update(submitStarted(state));
    try {
      const response = await disambiguate(baseUrl, text, state.dialect);
      update(submitSucceeded(state, response));
    } catch (err) {
      const strings = STRINGS[state.language];
      const message =
        err instanceof ApiError
          ? `${strings.requestFailed}: ${err.message}`
          : strings.requestFailed;
      update(submitFailed(state, message));
    }
  }

  refs.inputText.addEventListener('input', () => {
    state = setInput(state, refs.inputText.value);
  });
  refs.dialectSelect.addEventListener('change', () => {
    update(setDialect(state, refs.dialectSelect.value as DialectChoice));
  });
  refs.submitButton.addEventListener('click', () => {
    void submit();
  });
  refs.viewTabs.addEventListener('click', (event) => {
    const button = (event.target as HTMLElement).closest('button[data-tab]');
    if (button) update(setTab(state, (button as HTMLElement).dataset.tab as ViewTab));
  });
  refs.outputBox.addEventListener('click', (event) => {
    const span = (event.target as HTMLElement).closest('.word');
    if (span) update(selectWord(state, Number((span as HTMLElement).dataset.index)));
  });
  refs.analysisList.addEventListener('click', (event) => {
    const row = (event.target as HTMLElement).closest('tr[data-index]');
    if (row) update(selectAnalysis(state, Number((row as HTMLElement).dataset.index)));
  });
  refs.languageToggle.addEventListener('click', () => {
    update(setLanguage(state, state.language === 'en' ? 'ar' : 'en'));
  });

  const win = doc.defaultView;
  if (win) {
    const applyWidth = () =>
      refs.container.classList.toggle('narrow', win.innerWidth <= NARROW_WIDTH);
    win.addEventListener('resize', applyWidth);
    applyWidth();
  }

  function render(): void {
    const strings = STRINGS[state.language];
    const dir = direction(state.language);
    doc.documentElement.dir = dir;
    doc.documentElement.lang = state.language;
    refs.container.dir = dir;

    refs.title.textContent = strings.appTitle;
    refs.languageToggle.textContent = strings.languageToggle;
    refs.inputText.placeholder = strings.inputPlaceholder;
    refs.dialectLabel.textContent = strings.dialectLabel;
    refs.submitButton.textContent = strings.submit;
    refs.submitButton.disabled = state.pending;
    refs.indicatorLabel.textContent = `${strings.dialectIndicator}: `;
    refs.analysisListTitle.textContent = strings.analysisList;
    refs.analysisViewerTitle.textContent = strings.analysisViewer;

    for (const option of Array.from(refs.dialectSelect.options)) {
      option.textContent = strings.dialects[option.value as DialectChoice];
    }
    refs.dialectSelect.value = state.dialect;

    for (const button of Array.from(refs.viewTabs.children)) {
      const tab = (button as HTMLElement).dataset.tab as ViewTab;
      button.textContent = strings.tabs[tab];
      button.classList.toggle('active', tab === state.activeTab);
    }

    refs.errorBanner.hidden = !state.error;
    refs.errorBanner.textContent = state.error ?? '';

    const response = state.response;
    refs.outputArea.hidden = !response;
    refs.analysisArea.hidden = !response;
    if (!response) return;

    refs.dialectIndicator.textContent = strings.dialects[response.dialect_used];
    if (response.dialect_scores) {
      const score = response.dialect_scores[response.dialect_used] ?? 0;
      refs.dialectIndicator.title = `${strings.score}: ${score.toFixed(3)}`;
    } else {
      refs.dialectIndicator.removeAttribute('title');
    }

    // The output box is a pure rendering of the stored view string;
    // Arabic runs right-to-left with the first word on the right.
    refs.outputBox.textContent = '';
    response.views[state.activeTab].split(' ').forEach((wordText, index) => {
      const span = doc.createElement('span');
      span.className = 'word';
      span.dataset.index = String(index);
      span.textContent = wordText;
      span.classList.toggle('selected', index === state.selectedWord);
      refs.outputBox.appendChild(span);
      refs.outputBox.append(' ');
    });

    const word = response.words[state.selectedWord];
    refs.analysisListHead.textContent = '';
    for (const column of LIST_COLUMNS) {
      const th = doc.createElement('th');
      th.textContent = column === 'score' ? strings.score : column;
      refs.analysisListHead.appendChild(th);
    }
    refs.analysisList.textContent = '';
    word.analyses.forEach((analysis, index) => {
      const row = doc.createElement('tr');
      row.dataset.index = String(index);
      row.classList.toggle('selected', index === state.selectedAnalysis);
      const cells = [
        analysis.score.toFixed(3),
        analysis.diac,
        analysis.lemma,
        analysis.pos,
        analysis.features.gen,
        analysis.features.num,
        analysis.features.per,
      ];
      for (const value of cells) {
        const td = doc.createElement('td');
        td.textContent = value;
        row.appendChild(td);
      }
      refs.analysisList.appendChild(row);
    });

    const analysis = word.analyses[state.selectedAnalysis];
    refs.analysisViewer.textContent = '';
    const heading = doc.createElement('p');
    heading.className = 'viewer-diac';
    heading.dir = 'rtl';
    heading.textContent = analysis.diac;
    refs.analysisViewer.appendChild(heading);
    const summary = doc.createElement('p');
    summary.className = 'viewer-summary';
    summary.textContent =
      `${strings.gloss}: ${analysis.gloss} | ` +
      `${strings.score}: ${analysis.score.toFixed(3)} | ` +
      `${analysis.tokens.join(' ')}`;
    refs.analysisViewer.appendChild(summary);
    const table = doc.createElement('table');
    table.className = 'features-table';
    for (const [name, value] of Object.entries(analysis.features)) {
      const row = doc.createElement('tr');
      const nameCell = doc.createElement('th');
      nameCell.textContent = name;
      const valueCell = doc.createElement('td');
      valueCell.textContent = value;
      row.append(nameCell, valueCell);
      table.appendChild(row);
    }
    refs.analysisViewer.appendChild(table);
  }

  render();
  return { root, getState: () => state };
}
