// Built-in dialogue act taxonomy: 15 acts with descriptions and usage examples.

#include "das/core.hpp"

namespace das::core {

Taxonomy Taxonomy::default_taxonomy(bool open_extension) {
  Taxonomy t;
  t.open_extension = open_extension;
  t.acts = {
      {"inquire",
       "Seeks information or clarification. Includes direct questions or indirect inquiries.",
       {"What time does the meeting start?"}},
      {"clarify",
       "Seeks to resolve ambiguity, misunderstanding, or confusion in a previous statement. Often involves rephrasing, elaboration, or highlighting specific details.",
       {"I meant next Tuesday."}},
      {"inform",
       "Provides factual information, details, or observations.",
       {"This policy was updated last week."}},
      {"express",
       "Communicates emotions, attitudes, or subjective opinions.",
       {"That's an excellent idea!"}},
      {"agree",
       "Affirms or aligns with a previous statement.",
       {"Yeah, that makes sense to me."}},
      {"disagree",
       "Explicitly communicates disagreement or contradiction with a previous statement or idea. May provide reasoning or counterarguments but does not necessarily imply hostility or conflict.",
       {"That doesn't seem right to me."}},
      {"commit",
       "Explicitly agrees or promises to take a future action, either in response to a request or as a declaration of intent. The action must be something the speaker is directly responsible for performing.",
       {"Yes, I’ll take care of that."}},
      {"acknowledge",
       "Neutral receipt of information, often used for backchanneling or minimal responses.",
       {"I see.", "Okay."}},
      {"seek_action",
       "Represents any utterance where the speaker seeks to influence the listener’s behavior, encompassing both polite requests and authoritative commands.",
       {"Could you please send me the file?", "Turn off the light."}},
      {"suggest",
       "Proposes an action, idea, or alternative. May include advice or recommendations.",
       {"Why don’t you try restarting your computer?"}},
      {"offer",
       "Voluntarily provides help, solutions, or resources.",
       {"Would you like some water?"}},
      {"reject",
       "Declines or refuses a proposal, offer, or request. May provide justification or explanation, though this is not required.",
       {"I’m sorry, but I’ll have to pass."}},
      {"encourage",
       "Provides motivation, praise, or positive reinforcement.",
       {"Don’t worry, you’ll figure it out!"}},
      {"manage_topic",
       "Handles transitions between conversation topics. Can be used for opening, changing, or closing topics.",
       {"Let’s move on to the next point."}},
      {"social_interaction",
       "Includes greetings and meaningless small talk designed for polite social interaction.",
       {"Hello.", "How are you?", "Fine. And you?"}},
  };
  return t;
}

}  // namespace das::core
