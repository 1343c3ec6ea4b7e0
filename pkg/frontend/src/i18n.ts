import type { DialectChoice, Language, ViewTab } from './types.js';

/** Static interface string tables; the Arabic UI mirrors the layout. */

export interface Strings {
  appTitle: string;
  inputPlaceholder: string;
  submit: string;
  dialectLabel: string;
  dialectIndicator: string;
  analysisList: string;
  analysisViewer: string;
  score: string;
  gloss: string;
  emptyInput: string;
  requestFailed: string;
  languageToggle: string;
  dialects: Record<DialectChoice, string>;
  tabs: Record<ViewTab, string>;
}

export const STRINGS: Record<Language, Strings> = {
  en: {
    appTitle: 'Arabic Multi-Dialect Morphological Disambiguation',
    inputPlaceholder: 'Enter an Arabic sentence',
    submit: 'Disambiguate',
    dialectLabel: 'Dialect',
    dialectIndicator: 'Dialect used',
    analysisList: 'Analyses',
    analysisViewer: 'Analysis details',
    score: 'score',
    gloss: 'gloss',
    emptyInput: 'Please enter a sentence first.',
    requestFailed: 'Request failed',
    languageToggle: 'العربية',
    dialects: {
      auto: 'Auto-Detect',
      msa: 'MSA',
      egy: 'Egyptian',
      glf: 'Gulf',
      lev: 'Levantine',
    },
    tabs: {
      diac_pos: 'Diacritized/POS',
      tokenized: 'Tokenized',
      lemmatized: 'Lemmatized',
    },
  },
  ar: {
    appTitle: 'التحليل الصرفي وإزالة اللبس للعربية ولهجاتها',
    inputPlaceholder: 'أدخل جملة عربية',
    submit: 'حلِّل',
    dialectLabel: 'اللهجة',
    dialectIndicator: 'اللهجة المستخدمة',
    analysisList: 'التحليلات',
    analysisViewer: 'تفاصيل التحليل',
    score: 'الدرجة',
    gloss: 'المعنى',
    emptyInput: 'الرجاء إدخال جملة أولاً.',
    requestFailed: 'فشل الطلب',
    languageToggle: 'English',
    dialects: {
      auto: 'كشف تلقائي',
      msa: 'الفصحى',
      egy: 'المصرية',
      glf: 'الخليجية',
      lev: 'الشامية',
    },
    tabs: {
      diac_pos: 'التشكيل وأقسام الكلام',
      tokenized: 'التقطيع',
      lemmatized: 'التجذيع',
    },
  },
};

export function direction(language: Language): 'ltr' | 'rtl' {
  return language === 'ar' ? 'rtl' : 'ltr';
}
