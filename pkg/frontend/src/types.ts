/** Wire types of the disambiguation service JSON API. */

export type DialectChoice = 'auto' | 'msa' | 'egy' | 'glf' | 'lev';
export type DialectId = Exclude<DialectChoice, 'auto'>;
export type ViewTab = 'diac_pos' | 'tokenized' | 'lemmatized';
export type Language = 'en' | 'ar';

export interface AnalysisOut {
  diac: string;
  pos: string;
  lemma: string;
  tokens: string[];
  gloss: string;
  features: Record<string, string>;
  score: number;
}

export interface WordOut {
  raw: string;
  top: AnalysisOut;
  analyses: AnalysisOut[];
}

export interface ApiResponse {
  dialect_used: DialectId;
  dialect_scores?: Record<string, number>;
  words: WordOut[];
  views: Record<ViewTab, string>;
}

export interface DialectInfo {
  id: DialectId;
  display_name: string;
  supports_diacritization: boolean;
}
